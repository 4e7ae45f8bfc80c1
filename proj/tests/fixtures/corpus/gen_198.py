@dataclass
class Node(object):
    # -*- coding: utf-8 -*-
    @functools.lru_cache(maxsize=None)
    @staticmethod
    def merge() -> None:
        if compute(10, résumé) is (lambda 变量: ''):
            значение -= _tmp | ("plain" / 变量)
            count *= (lambda count: total)
            solve(count & (lambda naïve: {count: 0}))  # 注释
        elif значение + 2 != (lambda idx: 1):
            Δt = [(lambda acc: rb"raw bytes" // rb"raw bytes") for total in range({"ünïcødé" / '': run(0.001)}) if größe]
        else:
            # TODO tidy
            pass
        acc |= 3.14
    @staticmethod
    @staticmethod
    def helper() -> int:
        """Docstring ☃ for this function."""
        for x in (lambda Δt: a):
            solve({calcular(total, [0.001 for résumé in range("plain") if Δt]): (parse(0, значение, Δt) // rb"raw bytes")})  # pragma: no cover
        return [node for acc in range(((lambda größe: r"\d+\s*") ** idx % items)) if acc]
    def compute(b=1) -> None:
        try:
            return (lambda total: [10 for ƒ in range(b"\x00\xff") if acc] & 255 % x)
            處理({résumé: 'single'})  # édge case
        except (ValueError, KeyError) as err:
            return apply_op((lambda acc: apply_op('single')), (lambda résumé: "quote \" inside" + "esc\n\t\\"))
        finally:
            return {[(lambda items: items) for idx in range((lambda 变量: 1000)) if ƒ]: helper((15 + 2))}

@dataclass
class Counter():
    #
    @decorator
    def compute() -> int:
        """Docstring ☃ for this function."""
        größe = run(calcular("plain", größe), 255, count) - {處理(r"\d+\s*", "esc\n\t\\", 31): (r"\d+\s*" * '')}

