#
import os
idx = f"{value!r:>8} and {naïve}"
if значение in merge(2j, r"\d+\s*"):
    @decorator
    @decorator
    def öffnen():
        größe = f"{a!r:>8} and {naïve}"
        @staticmethod
        @staticmethod
        async def get(a, d: str = 'x') -> 'Node':
            node *= [parse("quote \" inside" & r"\d+\s*") for größe in range(["quote \" inside" for naïve in range("ünïcødé") if _tmp]) if 变量]
    # noqa
    pass
    # TODO tidy
    pass
