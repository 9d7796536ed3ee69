"""Python smoke tests for the compiled module."""

import pytest

ba = pytest.importorskip("boolattice")


def test_perm_roundtrip_and_parity():
    p = ba.Perm.parse("(1 2)(3 4 5)", 6)
    assert p.sign() == -1
    assert p.then(p.inverse()).is_identity()
    assert ba.Perm.parse(p.image_string(), 6) == p
    q = ba.induced_pair_action(ba.Perm.parse("(1 2)", 5))
    assert q.sign() == -1


def test_group_basics():
    s4 = ba.Group.symmetric(4)
    assert s4.order == 24
    a4 = ba.Group.alternating(4)
    assert a4.is_subgroup_of(s4)
    assert not a4.contains(ba.Perm.parse("(1 2)", 4))
    m12 = ba.registry_group("m12")
    assert m12.order == 95040
    assert m12.is_transitive()


def test_cyclic6_interval():
    c6 = ba.Group.build([ba.Perm.parse("(1 2 3 4 5 6)", 6)])
    triv = ba.Group.trivial(6)
    lat = ba.enumerate_interval(c6, triv)
    assert lat.size == 4
    t = lat.totients()
    assert t["phi"] == 2
    assert t["phi_hat"] == 2
    cert = lat.certificate()
    assert cert["boolean"] and cert["rank"] == 2


def test_borel_case():
    rep = ba.run_case("borel-psl32")
    assert rep["pass"], rep["checks"]


def test_partition_chain_and_atom_index():
    h = ba.partition_chain(8, [4, 2], "sym", [1, 2])
    assert h.order == 128
    assert ba.partition_atom_index(8, [4, 2], 1) == 9
    assert ba.partition_atom_index(8, [4, 2], 2) == 3


def test_constructed_interval_and_audit():
    lat = ba.constructed_partition_interval(8, [4, 2], "sym", False)
    assert lat.size == 4
    audit = ba.structural_lemma_audit(lat, "smoke")
    assert audit["verdict"]
    assert audit["phi_hat"] >= 2


def test_json_roundtrip():
    lat = ba.constructed_partition_interval(8, [4, 2], "sym", False)
    dump = lat.to_json()
    lat2 = ba.lattice_from_json(dump)
    assert lat2.totients() == lat.totients()
