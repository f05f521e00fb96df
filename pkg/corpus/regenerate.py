"""Rebuild the corpus documents and the expected reports.

Run from the repository root: ``python3 corpus/regenerate.py``.  The test
suite replays every manifest entry and compares bytes.
"""

import pathlib

from tmotifs.artin_galois import weil_restriction
from tmotifs.cli import Document, canonical_dumps, loads_document, run
from tmotifs.field_tower import BaseField, PolyMatrix, Poly
from tmotifs.tmotif_core import carlitz, make_effective, unit

HERE = pathlib.Path(__file__).resolve().parent

DOCS = {}


def rational(q=2):
    return BaseField.rational(q)


def m_xi(base, xi):
    K = base.field
    S = PolyMatrix.of(K, [[Poly(K, [K.zero, xi]), Poly(K, [K.one])],
                          [Poly(K, [K.one]), Poly(K, [])]], 2)
    return make_effective(base, S, 2)


def build_docs():
    Q = rational(2)
    K = Q.field
    DOCS["unit"] = Document(unit(Q), {"name": "unit motif"})
    DOCS["carlitz"] = Document(carlitz(Q), {"name": "Carlitz motif"})
    DOCS["carlitz2"] = Document(carlitz(Q, 2), {"name": "C^2 (Carlitz square)"})
    DOCS["carlitz3"] = Document(carlitz(Q, 3), {"name": "C^3"})
    DOCS["mxi0"] = Document(m_xi(Q, K.zero), {"name": "M_xi at xi = 0"})
    DOCS["mxi1"] = Document(m_xi(Q, K.one), {"name": "M_xi at xi = 1"})
    DOCS["mxi_inv_theta"] = Document(m_xi(Q, K.inv(Q.theta)), {"name": "M_xi at xi = 1/theta"})
    Q3 = rational(3)
    DOCS["mxi_inv_theta_q3"] = Document(m_xi(Q3, Q3.field.inv(Q3.theta)),
                                        {"name": "M_xi at xi = 1/theta, q = 3"})
    F2 = BaseField.finite(2, 1, theta=0)
    k2 = F2.field
    S = PolyMatrix.of(k2, [[Poly(k2, []), Poly(k2, [0, 1])], [Poly(k2, [1]), Poly(k2, [])]], 2)
    DOCS["v_half"] = Document(make_effective(F2, S, 2), {"name": "V_{1/2} over F_2, theta = 0"})
    F2b = BaseField.finite(2, 1, theta=1)
    DOCS["mxi0_f2"] = Document(m_xi(F2b, F2b.field.zero), {"name": "M_xi at xi = 0 over F_2, theta = 1"})
    DOCS["carlitz_f2"] = Document(carlitz(F2b), {"name": "Carlitz motif over F_2, theta = 1"})
    F4 = BaseField.finite(2, 2, theta=1)
    DOCS["unit_f4"] = Document(unit(F4), {"name": "unit motif over F_4"})
    DOCS["weil_unit_f4"] = Document(weil_restriction(unit(F4), F2b),
                                    {"name": "Weil restriction of the unit motif, F_4 to F_2"})
    DOCS["weil_carlitz_f4"] = Document(weil_restriction(carlitz(F4), F2b),
                                       {"name": "Weil restriction of C, F_4 to F_2"})


MANIFEST = [
    ("define-check", ["carlitz"], []),
    ("weights", ["carlitz"], []),
    ("weights", ["carlitz2"], []),
    ("weights", ["mxi0"], []),
    ("weights", ["mxi1"], []),
    ("weights", ["v_half"], []),
    ("hom", ["unit", "unit"], ["--bound", "3"]),
    ("hom", ["unit", "carlitz"], ["--bound", "3"]),
    ("tensor", ["carlitz", "carlitz"], []),
    ("dual", ["carlitz"], []),
    ("purity", ["v_half"], ["--slope", "1/2"]),
    ("purity", ["mxi1"], ["--slope", "0"]),
    ("analytic", ["carlitz"], ["--t-prec", "16"]),
    ("analytic", ["carlitz2"], ["--t-prec", "16"]),
    ("analytic", ["mxi_inv_theta"], ["--t-prec", "16"]),
    ("analytic", ["mxi_inv_theta_q3"], ["--t-prec", "12"]),
    ("analytic", ["mxi1"], ["--t-prec", "16"]),
    ("omega", [], ["--q", "2", "--t-prec", "16", "--prec", "160"]),
    ("artin", ["mxi0_f2"], []),
    ("artin", ["carlitz_f2"], []),
    ("artin", ["mxi0"], []),
    ("h-lambda", ["carlitz_f2"], ["--lambda", "t", "--level", "2"]),
    ("h-lambda", ["carlitz_f2"], ["--lambda", "t+1", "--level", "1"]),
    ("tate", ["mxi0_f2", "weil_unit_f4"], ["--lambda", "t", "--level", "1"]),
    ("artin", ["weil_unit_f4"], []),
    ("h-lambda", ["weil_carlitz_f4"], ["--lambda", "t", "--level", "2"]),
    ("fg-sigma", ["carlitz"], []),
    ("fg-sigma", ["unit"], []),
]


def entry_name(cmd, docs, flags):
    parts = [cmd] + docs + [f.lstrip("-").replace("/", "_") for f in flags]
    return "__".join(parts)


def main():
    build_docs()
    for name, d in DOCS.items():
        text = d.dumps()
        assert loads_document(text).dumps() == text
        (HERE / f"{name}.json").write_text(text)
    entries = []
    for cmd, docs, flags in MANIFEST:
        argv = [cmd] + [f"corpus/{d}.json" for d in docs] + flags
        code, env, _ = run(argv)
        name = entry_name(cmd, docs, flags)
        (HERE / "expected" / f"{name}.json").write_text(canonical_dumps(env))
        entries.append({"argv": argv, "exit": code, "expected": f"expected/{name}.json"})
    (HERE / "manifest.json").write_text(canonical_dumps({"entries": entries}))


if __name__ == "__main__":
    main()
