from fractions import Fraction

import pytest

from freudenthal import rootdata as rd


def test_positive_root_counts():
    for label, count in (
        ("A2", 3),
        ("C3", 9),
        ("D4", 12),
        ("F4", 24),
        ("G2", 6),
        ("E6", 36),
        ("E7", 63),
        ("E8", 120),
    ):
        d = rd.build_root_system(label)
        assert len(d.positive_roots) == count, label


def test_f4_long_short_split():
    d = rd.build_root_system("F4")
    lengths = [rd._dot(r, r) for r in d.positive_roots]
    long_n = sum(1 for v in lengths if v == max(lengths))
    short_n = sum(1 for v in lengths if v == min(lengths))
    assert (long_n, short_n) == (12, 12)


def test_cartan_matrix_g2():
    d = rd.build_root_system("G2")
    c = d.cartan
    assert sorted((c[0][1], c[1][0])) == [-3, -1]
    assert c[0][0] == c[1][1] == 2


def test_unknown_label():
    with pytest.raises(rd.UnknownLabel):
        rd.build_root_system("H4")


def test_subregular_markings():
    # the branch/middle vertex carries 0, all others 2
    for label, zero_node in (("D4", 2), ("A3", 2), ("E6", 4)):
        d = rd.build_root_system(label)
        m = rd.subregular_marking(d)
        for i in d.nodes():
            assert m[i] == (0 if i == zero_node else 2)
    with pytest.raises(rd.NoBranchVertex):
        rd.subregular_marking(rd.build_root_system("A2"))


def test_favorable_parabolics():
    for label, levi, dim in (("D5", "D4", 8), ("D6", "D5", 10), ("E7", "E6", 27)):
        d = rd.build_root_system(label)
        fav = rd.favorable_parabolics(d)
        assert {l for _, l, _ in fav} == {levi}
        assert {n for _, _, n in fav} == {dim}
    d = rd.build_root_system("E6")
    fav = rd.favorable_parabolics(d)
    assert len(fav) == 2  # nodes 1 and 6 both work
    assert {l for _, l, _ in fav} == {"D5"}
    assert {n for _, _, n in fav} == {16}


def test_heisenberg_parabolics():
    for label, g1 in (("F4", 14), ("E6", 20), ("E7", 32), ("E8", 56), ("G2", 4)):
        d = rd.build_root_system(label)
        p, (g0, g1_got, g2) = rd.heisenberg_parabolic(d)
        assert g1_got == g1, label
        assert g2 == 1


def test_rho_exponents():
    # Siegel parabolic of C3
    d = rd.build_root_system("C3")
    p = rd.maximal_parabolic(d, 3)
    det = tuple(Fraction(1) for _ in range(d.ambient_dim))
    assert rd.nilradical_char_exponent(p, det) == (Fraction(4), Fraction(2))
    # Heisenberg parabolic of G2
    d = rd.build_root_system("G2")
    p, _ = rd.heisenberg_parabolic(d)
    assert rd.nilradical_char_exponent(p, d.highest_root) == (
        Fraction(3),
        Fraction(3, 2),
    )
    # rank-2-block parabolic of F4
    d = rd.build_root_system("F4")
    p = rd.maximal_parabolic(d, 3)
    det = rd.amber_parabolic_det_weight(d)
    assert rd.nilradical_char_exponent(p, det) == (Fraction(7), Fraction(7, 2))


def test_amber_parabolic_det_weight_value():
    d = rd.build_root_system("F4")
    det = rd.amber_parabolic_det_weight(d)
    assert det == (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))


def test_not_proportional():
    d = rd.build_root_system("C3")
    p = rd.maximal_parabolic(d, 1)
    with pytest.raises(rd.NotProportional):
        rd.nilradical_char_exponent(p, tuple(Fraction(1) for _ in range(3)))


def test_levi_orbit_counts():
    cases = (
        ("C3", 3, (1, 2), 4),
        ("A5", 3, (1, 2, 4, 5), 4),
        ("D6", 6, (1, 2, 3, 4, 5), 4),
        ("E7", 7, (1, 2, 3, 4, 5, 6), 4),
        ("A2", 1, (2,), 2),
    )
    for label, node, levi, expected in cases:
        d = rd.build_root_system(label)
        w = d.fundamental_weights()[node - 1]
        assert rd.levi_orbit_count(d, w, levi) == expected, label


def test_magic_square_rows():
    for dim_d, g in ((1, "F4"), (2, "E6"), (4, "E7"), (8, "E8")):
        row = row = rd.magic_square_row(dim_d)
        assert row["G"] == g
        assert row["dim_g1"] == row["dim_g1_expected"]
    # the stored dim-4 row lists E6 where the Heisenberg Levi is D6:
    # reported as a disagreement, not an error
    row = rd.magic_square_row(4)
    assert row["M_computed"] == "D6"
    assert row["M_stored"] == "E6"
    assert row["M_agrees"] is False
    assert rd.magic_square_row(1)["M_agrees"] is True


def test_stored_constant_tables_structure():
    t = rd.stored_constant_tables()
    assert t["provenance"] == "stored-constants-v1"
    ab = {r["G"]: r for r in t["abelian_coinvariants"]}
    assert (ab["E7"]["s"], ab["E7"]["t"], ab["E7"]["d_stored"]) == (6, 3, 27)
    assert ab["E7"]["d_computed"] == [27]
    assert (ab["E6"]["s"], ab["E6"]["t"], ab["E6"]["d_stored"]) == (4, 2, 16)
    heis = {r["G"]: r for r in t["heisenberg_coinvariants"]}
    assert (heis["E8"]["s"], heis["E8"]["t"], heis["E8"]["d_computed"]) == (10, 6, 56)
    gl2 = {r["G"]: (r["s"], r["t"]) for r in t["gl2_block_exponents"]}
    assert gl2 == {"E6": (2, Fraction(3, 2)), "E7": (3, 2), "E8": (5, 3)}
    sc = t["scalar_exponents"]
    assert sc["mirabolic_jacquet"] == (1, "n-1")
    assert sc["siegel_twist_exponent"] == 2
    assert sc["heisenberg_gl2_twist_exponent"] == 4
    assert sc["double_twist_exponents"] == (6, 4)


def test_weight_orbit_sizes():
    d = rd.build_root_system("E7")
    assert len(rd.weight_orbit(d, d.fundamental_weights()[6])) == 56
    d = rd.build_root_system("D6")
    assert len(rd.weight_orbit(d, d.fundamental_weights()[5])) == 32
