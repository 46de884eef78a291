import pytest

import orbik


def test_cyclotomic_arithmetic():
    z = orbik.Cyclotomic("E(3)")
    assert z + z * z == orbik.Cyclotomic(-1)
    assert str(orbik.Cyclotomic("E(4)^2 + 1")) == "0"
    assert (orbik.Cyclotomic(1) / (orbik.Cyclotomic(1) - z)) == (orbik.Cyclotomic(2) + z) / orbik.Cyclotomic(3)
    assert orbik.Cyclotomic("E(5)").as_integer() is None
    assert orbik.Cyclotomic("E(3)+E(3)^2+1").as_integer() == 0
    with pytest.raises(ValueError):
        orbik.Cyclotomic("E(3")


def test_groups_and_tables():
    s3 = orbik.Group.builtin("S3")
    assert s3.order == 6
    assert [c["size"] for c in s3.classes()] == [1, 3, 2]
    table = s3.character_table()["irreducibles"]
    assert table == [["1", "1", "1"], ["1", "-1", "1"], ["2", "0", "-1"]]
    z4 = orbik.Group.from_json('{"type": "cayley", "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}')
    assert z4.num_classes == 4
    with pytest.raises(ValueError):
        orbik.Group.builtin("nonsense")


def test_worked_example():
    e = orbik.InertialProduct(orbik.Group.builtin("Z2"), ["sign"])
    assert e.basis_size == 4
    assert e.product_coordinates(2, 2) == [2, -2, 0, 0]
    report = e.check(10)
    assert report["passed"]


def test_bg_matches_drinfeld():
    for name in ["Z2", "S3", "Q8"]:
        g = orbik.Group.builtin(name)
        result = orbik.compare(g)
        assert result["identical"]
        virt = orbik.InertialProduct(g).product_table()
        assert virt == orbik.drinfeld_fusion(g)


def test_seed_independence_and_trivial_group():
    g = orbik.Group.builtin("D4")
    ref = orbik.InertialProduct(g, ["irrep:4"]).canonical_product_table()
    assert orbik.InertialProduct(g, ["irrep:4"], seed=17).canonical_product_table() == ref
    t = orbik.InertialProduct(orbik.Group.builtin("trivial"), ["trivial", "trivial"]).product_table()
    assert t["constants"] == [[0, 0, 0, 1]]
