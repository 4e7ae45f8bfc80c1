while ['single' for значение in range("plain") if b] == (x % 'single'):
	# pragma: no cover
	pass
	größe *= {['single' for 变量 in range(10) if Δt]: [résumé ** '' for a in range(('' << "plain")) if count]}

