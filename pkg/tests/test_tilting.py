import pytest

from jkdp.excoll import build, kclass_of_object
from jkdp.surface import build_surface
from jkdp.tilting import universal_extension_tilting


def test_k1_strong_collection_unchanged():
    result = universal_extension_tilting(1, "sigma_mut")
    assert result.unchanged
    assert result.certified
    assert [s.label for s in result.summands] == build(1, "sigma_mut").labels()


def test_k2_exactly_four_steps():
    result = universal_extension_tilting(2, "sigma_mut")
    assert len(result.steps) == 4
    assert result.certified
    heads = sorted(s.head for s in result.steps)
    assert heads == ["b1.1", "b2.1", "b3.1", "b4.1"]
    targets = sorted(s.target for s in result.steps)
    assert targets == ["b1.2", "b2.2", "b3.2", "b4.2"]
    assert all(s.copies == 1 for s in result.steps)


def test_k2_class_bookkeeping():
    result = universal_extension_tilting(2, "sigma_mut")
    objects = build(2, "sigma_mut").objects
    labels = [o.label() for o in objects]
    by_label = {s.label: s for s in result.summands}
    ext = by_label["(b1.2 : b1.1^1)"]
    assert ext.class_vector[labels.index("b1.2")] == 1
    assert ext.class_vector[labels.index("b1.1")] == 1
    model = build_surface(2)
    b11 = kclass_of_object(model, objects[labels.index("b1.1")])
    b12 = kclass_of_object(model, objects[labels.index("b1.2")])
    assert ext.kclass == b11 + b12


@pytest.mark.parametrize("k", [1, 2, 3])
def test_no_undetermined_small_k(k):
    result = universal_extension_tilting(k, "sigma_mut")
    assert result.undetermined == ()
    assert result.nonvanishing == ()


def test_k3_steps_per_tower():
    result = universal_extension_tilting(3, "sigma_mut")
    # each tower of three sheaves needs three extensions to clear its ext1
    assert len(result.steps) == 12
    assert result.certified


def test_sigma_with_floor_divisor_also_works():
    # the unmutated collection has degree-0/1 maps too
    result = universal_extension_tilting(2, "sigma")
    assert result.certified
    heads = [s.head for s in result.steps]
    assert "OD" in heads


def test_stack_collection_certifies():
    # the mutated stack collection also has only degree-0/1 forward maps,
    # so the sweep produces a certified object there as well
    for k in (1, 2):
        result = universal_extension_tilting(k, "stack_mut")
        assert result.certified
        assert result.steps
        assert all(s.kclass is None for s in result.summands)


def test_unknown_dims_rejected():
    with pytest.raises(Exception):
        universal_extension_tilting(2, "bad_label")
