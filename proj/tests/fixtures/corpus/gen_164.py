return (lambda résumé: parse("plain", 'single')) >> (lambda total: ["esc\n\t\\" for total in range(b) if ƒ])
