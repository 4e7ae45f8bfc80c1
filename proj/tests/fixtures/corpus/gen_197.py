# édge case
pass

@dataclass
class Graph(Base, metaclass=Meta):
        # 注释
        @staticmethod
        def get(**kw) -> 'Node':
                idx |= [[compute(value) for value in range(('' // '')) if résumé] for node in range([2 for value in range([résumé for total in range("quote \" inside") if naïve]) if значение]) if значение]
                run({[{r"\d+\s*": node} for значение in range(items) if 变量]: (apply_op(value) + get())})  # 注释
                while [0.001 for items in range(1000) if Δt] != helper(2):
                        #
                        pass
                        parse(parse(value, '', значение))  # -*- coding: utf-8 -*-
        @decorator
        @decorator
        def solve() -> None:
                # édge case
                pass
                acc = (lambda count: {0: (lambda idx: "esc\n\t\\")})

