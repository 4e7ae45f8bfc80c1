résumé = (lambda naïve: (("esc\n\t\\" / 1000) / 0.001))
total = 1 + \
    2
