#!/usr/bin/env python3
"""Regenerate golden.tsv from the per-case statements transcribed below.

The exceptional rows are copied by hand. The classical rows expand the printed
closed forms for k_0, l_0, dim u_2 and dim u_1 over ranks up to MAX_RANK; the
formulas are kept exactly as printed, including the ones the code disagrees with.

Usage: make_golden.py [out.tsv]
"""
import sys

MAX_RANK = 9

COLUMNS = ["case_id", "g_type", "nu", "k1_type", "k2_type", "l_type", "dim_u1",
           "dim_u2", "s", "deg_tau1", "self_dual", "bilinear", "inv_degree", "note"]

FAMILY_ORDER = "ABCDEFG"


def so(n):
    """Simple factors of so(n) written as Dynkin types."""
    if n <= 2:
        return []
    if n == 3:
        return [("A", 1)]
    if n == 4:
        return [("A", 1), ("A", 1)]
    if n == 6:
        return [("A", 3)]
    if n % 2:
        return [("B", (n - 1) // 2)]
    return [("D", n // 2)]


def sp(n):
    if n == 1:
        return [("A", 1)]
    if n == 2:
        return [("B", 2)]
    return [("C", n)]


def su(n):
    return [("A", n - 1)] if n >= 2 else []


def name(factors, torus=False):
    parts = sorted(factors, key=lambda t: (FAMILY_ORDER.index(t[0]), t[1]))
    s = "".join(f"{f}{r}" for f, r in parts)
    if torus:
        return "T1" + s
    return s or "-"


def closed_form_so(p, r):
    return str(2 * p) if p <= r else "none"


def closed_form_sp(p, q):
    return str(p) if p % 2 == 0 and p <= 2 * q else "none"


def row(case_id, g_type, nu, k1, k2, l, u1, u2, deg="-", sd="-", bil="-", inv="-", note=""):
    return [case_id, g_type, str(nu), name(k1), name(k2), name(l, torus=True),
            str(u1), str(u2), str(u2), str(deg), sd, bil, str(inv), note]


def exceptional():
    A, B, C, D, E = "ABCDE"
    return [
        row("G2_A1A1", "G2", 2, sp(1), sp(1), sp(1), 4, 1, 4, "y", "anti", 4,
            "k = sp1+sp1, l = T1 sp1"),
        row("F4_A1C3", "F4", 1, sp(1), sp(3), sp(3), 14, 1, 14, "y", "anti", 4,
            "k = sp1+sp3, l = T1 sp3"),
        row("F4_B4", "F4", 4, so(9), [], so(7), 8, 7, 8, "y", "sym", 2,
            "k = so9, l = T1 so7"),
        row("E6_A1A5_1", "E6", 3, su(6), su(2), su(5) + su(2), 20, 5, 20, "n", "none", "none",
            "k = su6+su2, l = T1 su5+su2"),
        row("E6_A1A5_2", "E6", 2, sp(1), su(6), su(6), 20, 1, 20, "y", "anti", 4,
            "k = sp1+su6, l = T1 su6"),
        row("E7_A1D6_1", "E7", 1, sp(1), so(12), so(12), 32, 1, 32, "y", "anti", 4,
            "k = sp1+so12, l = T1 so12"),
        row("E7_A1D6_2", "E7", 6, so(12), sp(1), so(10) + sp(1), 16, 10, 16, "n", "none", "none",
            "k = so12+sp1, l = T1 so10+sp1; dim u1 = 16 as printed"),
        row("E7_A7", "E7", 2, su(8), [], su(7), 35, 7, 35, "n", "none", 7,
            "k = su8, l = T1 su7 (prose says T1E6)"),
        row("E8_D8", "E8", 1, so(16), [], so(14), 64, 14, 64, "n", "none", 8,
            "k = so16, l = T1 so14"),
        row("E8_A1E7", "E8", 8, sp(1), [(E, 7)], [(E, 7)], 56, 1, 56, "y", "anti", 4,
            "k = sp1+e7, l = T1 e7"),
    ]


def family_b(l):
    out = []
    if l == 2:
        out.append(row("Spin_4_1", "B2", 2, sp(1), sp(1), sp(1), 2, 1,
                       inv=closed_form_so(2, 1), note="Spin(4,1): dim u1 = 2, dim u2 = 1"))
        return out
    r = 2 * l - 3
    out.append(row(f"Spin_4_{r}", f"B{l}", 2, sp(1), sp(1) + so(r), sp(1) + so(r),
                   (2 * l - 3) * (2 * l - 4), 1, inv=closed_form_so(2, r),
                   note="Spin(4,2l-3): dim u1 = (2l-3)(2l-4), dim u2 = 1"))
    for p in range(3, l):
        r = 2 * l - 2 * p + 1
        out.append(row(f"Spin_{2 * p}_{r}", f"B{l}", p, so(2 * p), so(r), su(p) + so(r),
                       p * r, p * (p - 1) // 2, inv=closed_form_so(p, r),
                       note="Spin(2p,2l-2p+1): dim u1 = p(2l-2p+1), dim u2 = p(p-1)/2"))
    out.append(row(f"Spin_{2 * l}_1", f"B{l}", l, so(2 * l), [], su(l), l, l * (l - 1) // 2,
                   inv=closed_form_so(l, 1), note="Spin(2l,1): dim u1 = l, dim u2 = l(l-1)/2"))
    return out


def family_c(l):
    out = [row(f"Sp_1_{l - 1}", f"C{l}", 1, sp(1), sp(l - 1), sp(l - 1), 2 * l, 1,
               inv=closed_form_sp(1, l - 1), note="Sp(1,l-1): dim u1 = 2l, dim u2 = 1")]
    for p in range(2, l):
        q = l - p
        out.append(row(f"Sp_{p}_{q}", f"C{l}", p, sp(p), sp(q), su(p) + sp(q),
                       2 * p * q, (p - 1) * (p + 2) // 2, inv=closed_form_sp(p, q),
                       note="Sp(p,l-p): dim u1 = 2p(l-p), dim u2 = (p-1)(p+2)/2"))
    return out


def family_d(l):
    if l == 4:
        return [row("SO_4_4", "D4", 2, sp(1), sp(1) * 3, sp(1) * 3, 8, 1,
                    inv=closed_form_so(2, 4), note="SO(4,4): dim u1 = 8, dim u2 = 1")]
    r = 2 * l - 4
    out = [row(f"Spin_4_{r}", f"D{l}", 2, sp(1), sp(1) + so(r), sp(1) + so(r), 4 * (l - 2), 1,
               inv=closed_form_so(2, r), note="Spin(4,2l-4): dim u1 = 4(l-2), dim u2 = 1")]
    for p in range(3, l - 1):
        r = 2 * l - 2 * p
        note = "Spin(2p,2l-2p): dim u1 = 2p(l-p), dim u2 = p(p-1)/2"
        if p == l - 2:
            note += "; p = l-2 lies outside the stated range 2<p<l-2"
        out.append(row(f"Spin_{2 * p}_{r}", f"D{l}", p, so(2 * p), so(r), su(p) + so(r),
                       2 * p * (l - p), p * (p - 1) // 2, inv=closed_form_so(p, r), note=note))
    return out


def main():
    rows = exceptional()
    for l in range(2, MAX_RANK + 1):
        rows += family_b(l)
    for l in range(3, MAX_RANK + 1):
        rows += family_c(l)
    for l in range(4, MAX_RANK + 1):
        rows += family_d(l)
    text = "\t".join(COLUMNS) + "\n" + "".join("\t".join(r) + "\n" for r in rows)
    out = sys.argv[1] if len(sys.argv) > 1 else "golden.tsv"
    with open(out, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


if __name__ == "__main__":
    main()
