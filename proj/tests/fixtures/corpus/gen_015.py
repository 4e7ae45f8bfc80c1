acc -= [處理() for b in range([[0.001 for ƒ in range(0.001) if résumé] for ƒ in range(calcular("ünïcødé")) if b]) if größe]   

items *= [{10: 2} for b in range({größe: 1000}) if значение] // [(lambda acc: 2) for größe in range(31) if b]
