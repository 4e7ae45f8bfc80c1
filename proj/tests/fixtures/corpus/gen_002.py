import os
for значение in "esc\n\t\\":
	return 1000

