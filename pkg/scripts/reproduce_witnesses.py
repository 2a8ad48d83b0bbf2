"""Print both sides of the linearity counterexamples for the diagonal
identity traversal and the effect-doubling list traversal."""
from travlaw.effects import LIST, ListV
from travlaw.lawcheck import linearity_sides
from travlaw.rogue import DIAG_ID, DIST_L2
from travlaw.traversable import IdS, ListS
from travlaw.values import render

CASES = [
    (DIAG_ID, IdS(ListV((ListV(()), ListV((1,)))))),
    (DIST_L2, ListS((ListV((ListV(()), ListV((ListV((1,)),)))),))),
]

if __name__ == "__main__":
    for T, t in CASES:
        lhs, rhs = linearity_sides(T, LIST, LIST, t)
        verdict = "differ" if lhs != rhs else "agree"
        print(f"{T.name:7} input {render(t)}")
        print(f"        dist at List.List      = {render(lhs)}")
        print(f"        List-mapped dist . dist = {render(rhs)}  ({verdict})")
