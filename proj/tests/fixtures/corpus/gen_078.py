return 處理()   
def run(c: int, *args):
	for größe in (lambda count: 'single'):
		def run(**kw) -> 'Node':
			# TODO tidy
			pass
			solve({({r"\d+\s*": Δt} // "ünïcødé"): [0.001 - 2 for items in range({31: b"\x00\xff"}) if значение]})  # 注释
		for ƒ in rb"raw bytes":
			return r"\d+\s*"
			# 注释
			pass

value = 1 + \
    2
