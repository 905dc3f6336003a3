"""The three n = 4 reference tables, as (code, permutation) pairs in 0-based compact form.

Each table lists its 24 entries column by column.  ``fy`` pairs Fisher-Yates
codes with their outputs in lex order, ``dual`` pairs the dual codes, and
``inv`` pairs value-indexed inversion tables with permutations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import (
    TriangularCode,
    dual_decode,
    dual_encode,
    dual_table_layout,
    fy_decode,
    fy_encode,
    inv_decode,
    inv_encode,
    parse_dual,
)
from .perm import Permutation

_FY_CODES = [f"0{a}{b}{c}" for a in range(4) for b in range(3) for c in range(2)]
_FY_PERMS = """
    1230 2130 2310 3210 1320 3120  3201 2301 2031 0231 3021 0321
    1302 3102 3012 0312 1032 0132  1203 2103 2013 0213 1023 0123
""".split()

_DUAL_CODES = [f"0{b}{c}{d}" for b in range(2) for c in range(3) for d in range(4)]
_DUAL_PERMS = """
    1230 3201 1302 1203  2310 2031 3012 2013  1320 3021 1032 1023
    2130 2301 3102 2103  3210 0231 0312 0213  3120 0321 0132 0123
""".split()

_INV_CODES = _DUAL_CODES
_INV_PERMS = """
    0123 0132 0312 3012  0213 0231 0321 3021  2013 2031 2301 3201
    1023 1032 1302 3102  1203 1230 1320 3120  2103 2130 2310 3210
""".split()

TABLES: dict[str, list[tuple[str, str]]] = {
    "fy": list(zip(_FY_CODES, _FY_PERMS)),
    "dual": list(zip(_DUAL_CODES, _DUAL_PERMS)),
    "inv": list(zip(_INV_CODES, _INV_PERMS)),
}


@dataclass(frozen=True)
class EntryCheck:
    table: str
    code: str
    perm: str
    decoded: str
    encoded: str

    @property
    def ok(self) -> bool:
        return self.decoded == self.perm and self.encoded == self.code


def _check(table: str, code: str, perm: str) -> EntryCheck:
    p = Permutation.from_compact(perm)
    if table == "fy":
        decoded = fy_decode(TriangularCode.parse(code[1:], 4, zero_based=True)).compact()
        encoded = fy_encode(p).table_layout()
    elif table == "dual":
        decoded = dual_decode(parse_dual(code[1:], 4, zero_based=True)).compact()
        encoded = dual_table_layout(dual_encode(p))
    else:
        decoded = inv_decode([int(ch) for ch in code]).compact()
        encoded = "".join(map(str, inv_encode(p).digits))
    return EntryCheck(table, code, perm, decoded, encoded)


def check_tables() -> list[EntryCheck]:
    return [_check(name, code, perm) for name, rows in TABLES.items() for code, perm in rows]
