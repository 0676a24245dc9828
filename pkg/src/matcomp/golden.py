"""Reference values used by the verification suites and the tests.

Each generator row is ``(composition, [(coefficient, [B-arguments]), ...])``:
a B-argument is a composition whose block word is the Lyndon index.
"""
from __future__ import annotations

SHUFFLE_EXAMPLES = [
    ("[1] sh2 [2]", "[1 e; e 2] + [e 1; 2 e] + [e 2; 1 e] + [2 e; e 1]"),
    ("[1] sh2 [2 3]",
     "[1 e e; e 2 3] + [e 1 e; 2 e 3] + [e e 1; 2 3 e] + [e 2 3; 1 e e] + [2 e 3; e 1 e] + [2 3 e; e e 1]"),
]

BLOCK_SHUFFLE_EXAMPLES = [
    ("[1] bsh [2]", "[1 e; e 2] + [2 e; e 1]"),
    ("[1] bsh [2 3]", "[1 e e; e 2 3] + [2 3 e; e e 1]"),
    ("[1] bsh [2 e e; e 3 4]",
     "[1 e e e; e 2 e e; e e 3 4] + [2 e e e; e 1 e e; e e 3 4] + [2 e e e; e 3 4 e; e e e 1]"),
]

QUASI_SHUFFLE_EXAMPLE = (
    "[1] qsh [2]",
    "[1 e; e 2] + [e 1; 2 e] + [e 2; 1 e] + [2 e; e 1] + [1 2] + [2 1] + [1; 2] + [2; 1] + [1*2]",
)

BLOCK_SHUFFLE_GENERATORS = [
    ("[2 e; e 1]", [(1, ["[1]", "[2]"]), (-1, ["[1 e; e 2]"])]),
    ("[1 e; e 1]", [("1/2", ["[1]", "[1]"])]),
    ("[1 2 e; e e 3]", [(1, ["[1 2]", "[3]"]), (-1, ["[3 e e; e 1 2]"])]),
    ("[e 1 e; 1 e e; e e 1]", [(1, ["[e 1; 1 e]", "[1]"]), (-1, ["[1 e e; e e 1; e 1 e]"])]),
    ("[2 e e; e 3 e; e e 1]",
     [(1, ["[2 e; e 3]", "[1]"]), (-1, ["[2]", "[1 e; e 3]"]), (1, ["[1 e e; e 3 e; e e 2]"])]),
    ("[3 e e; e 1 e; e e 2]",
     [(1, ["[3]", "[1 e; e 2]"]), (-1, ["[1 e e; e 2 e; e e 3]"]), (-1, ["[1 e e; e 3 e; e e 2]"])]),
    ("[3 e e; e 2 e; e e 1]",
     [(1, ["[1]", "[2]", "[3]"]), (-1, ["[2 e; e 3]", "[1]"]), (-1, ["[3]", "[1 e; e 2]"]),
      (1, ["[1 e e; e 2 e; e e 3]"])]),
    ("[1 e e; e 2 e; e e 1]", [(1, ["[1 e; e 2]", "[1]"]), (-2, ["[1 e e; e 1 e; e e 2]"])]),
]

SHUFFLE_GENERATORS = [
    ("[2 e; e 1]", [(1, ["[1]", "[2]"]), (-1, ["[1 e; e 2]"]), (-1, ["[e 1; 2 e]"]), (-1, ["[e 2; 1 e]"])]),
    ("[1 e; e 1]", [("1/2", ["[1]", "[1]"]), (-1, ["[e 1; 1 e]"])]),
    ("[1 2 e; e e 3]",
     [(1, ["[1 2]", "[3]"]), (-1, ["[3 e e; e 1 2]"]), (-1, ["[1 e 2; e 3 e]"]), (-1, ["[e e 3; 1 2 e]"]),
      (-1, ["[e 3 e; 1 e 2]"]), (-1, ["[e 1 2; 3 e e]"])]),
    ("[e 1 e; 1 e e; e e 1]",
     [(1, ["[e 1; 1 e]", "[1]"]), (-1, ["[1 e e; e e 1; e 1 e]"]), (-2, ["[e e 1; 1 e e; e 1 e]"]),
      (-2, ["[e 1 e; e e 1; 1 e e]"]), (-3, ["[e e 1; e 1 e; 1 e e]"])]),
]

# The third value includes the term 1/6*[1 2*3] from I = (3), J = (1, 1).
PHI_EXAMPLES = [
    ("[1]", "[1]"),
    ("[1;2]", "[1;2] + 1/2*[1*2]"),
    ("[1 e; e 2]", "[1 e; e 2] + 1/2*[1;2] + 1/2*[1 2] + 1/4*[1*2]"),
    ("[1 e; e 2; e 3]",
     "[1 e; e 2; e 3] + 1/2*[1 2; e 3] + 1/2*[1 e; e 2*3] + 1/2*[1;2;3] + 1/4*[1*2; 3] + 1/4*[1; 2*3]"
     " + 1/6*[1 2*3] + 1/12*[1*2*3]"),
]

# The third value exactly as displayed in the source, seven terms.
PHI_THIRD_AS_DISPLAYED = (
    "[1 e; e 2; e 3]",
    "[1 e; e 2; e 3] + 1/2*[1 2; e 3] + 1/2*[1 e; e 2*3] + 1/2*[1;2;3] + 1/4*[1*2; 3] + 1/4*[1; 2*3]"
    " + 1/12*[1*2*3]",
)

PHI_INV_EXAMPLES = [
    ("[1]", "[1]"),
    ("[1;2]", "[1;2] - 1/2*[1*2]"),
    ("[1 e; e 2]", "[1 e; e 2] - 1/2*[1;2] - 1/2*[1 2] + 1/4*[1*2]"),
]

EULERIAN_SHUFFLE_EXAMPLE = (
    "[1 e; e 2]",
    "1/2*[1 e; e 2] - 1/2*[2 e; e 1] - 1/2*[e 1; 2 e] - 1/2*[e 2; 1 e]",
)

LOG_SHUFFLE_EXAMPLE = ("[1 e; e 2]", "[1 e; e 2] - 1/2*[e 1; 2 e] - 1/2*[e 2; 1 e]")
EXP_SHUFFLE_EXAMPLE = ("[1 e; e 2]", "[1 e; e 2] + 1/2*[e 1; 2 e] + 1/2*[e 2; 1 e]")

CONNECTED_CHAIN = ["[1]", "[2]", "[1*2*3]", "[1 2]", "[2 1]", "[1;2]", "[2;1]", "[1 e; e 2]"]
GRLEX_CHAIN = ["[1]", "[1*2*3]", "[1 e; 3 2]", "[1 e; e 2]", "[2 e; e 1]", "[1 e e; 2 e e; e 3 e; e e 4]"]

LYNDON_WORDS = ["[1]", "[2]", "[1 e; e 2]", "[3 e; e 1; e 2]", "[1 2 e; e e 1; e e 2]"]
NON_LYNDON_WORDS = ["[2 e; e 1]", "[1 e; 2 e; e 3]", "[1 e e; 2 e e; e 1 2]",
                    "[1 e e; 2 e e; e 3 e; e e 4]"]

LYNDON_TRANSPORT_FIRST = ("[2 e; e 1]", "[2 e; e 1] + [e 2; 1 e] + [e 1; 2 e]")
# Literal second display; it treats [1 2] as smaller than [3].
LYNDON_TRANSPORT_SECOND = (
    "[3 e e; e 1 2]",
    "[3 e e; e 1 2] + [1 e 2; e 3 e] + [e e 3; 1 2 e] + [e 3 e; 1 e 2] + [e 1 2; 3 e e]",
)
COPRODUCT_WITNESS = "[1 e e; e 1 e; e e 2]"
