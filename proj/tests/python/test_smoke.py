import pytest

import herbrand as h


def test_k_returns_first_argument():
    assert str(h.evaluate("(app (app K (num 1)) (num 2))")) == "(num 1)"


def test_omega_diverges_at_fuel():
    w = "(app (app S (app (app S K) K)) (app (app S K) K))"
    r = h.normalize(h.Term.parse(f"(app {w} {w})"), fuel=500)
    assert r["status"] == "diverged"
    assert r["steps"] == 500


def test_parse_error_carries_offset():
    with pytest.raises(h.ParseError, match="offset"):
        h.Term.parse("(app K")


def test_lambda_and_apply():
    dup = h.lambda_(["x"], h.Term.pair(h.var("x"), h.var("x")))
    assert h.apply(dup, h.Term.num(3)) == h.Term.pair(h.Term.num(3), h.Term.num(3))


def test_entailment_verdicts():
    top = h.Predicate.parse("(predicate (index x) (x (top)))")
    bot = h.Predicate.parse("(predicate (index x) (x (bot)))")
    assert h.check_entailment(top, top, h.synth_identity())
    v = h.check_entailment(top, bot, h.synth_identity())
    assert v.kind == "fails"
    assert v.witness is not None


def test_conjunction_projections_hold():
    phi = h.Predicate.parse("(predicate (index x) (x (atom (a1 (num 1)) (gens (set (num 1))))))")
    psi = h.Predicate.parse("(predicate (index x) (x (atom (a1 (num 2) (num 3)) (gens (set (num 2))))))")
    both = h.Predicate.parse(
        "(predicate (index x) (x (and (atom (a1 (num 1)) (gens (set (num 1))))"
        " (atom (a1 (num 2) (num 3)) (gens (set (num 2)))))))"
    )
    assert h.check_entailment(both, phi, h.synth_conj_fst())
    assert h.check_entailment(both, psi, h.synth_conj_snd())


def test_wlem_sides():
    inhabited = h.TruthValue.atom([[h.Term.num(1)]], [h.Term.num(1)])
    empty = h.TruthValue.atom([], [h.Term.num(1)])
    v, inh, left, right = h.wlem_check(inhabited)
    assert v and inh and right and not left
    v, inh, left, right = h.wlem_check(empty)
    assert v and not inh and left and not right


def test_bound_round_trip():
    g = [3, 0, 5, 2]
    r = h.tracking_from_bound(g)
    assert h.bound_from_tracking(r, len(g) - 1) == g


def test_assembly_tracking():
    a = h.Assembly.parse("(assembly A (carrier a0 a1) (domain all) (alpha (a0 (gens (set (num 0)))) (a1 (gens (set (num 1))))))")
    b = h.Assembly.parse("(assembly B (carrier b0) (domain all) (alpha (b0 (gens (set (num 0))))))")
    f = h.parse_morphism("(morphism f (source A) (target B) (map (a0 b0) (a1 b0)))", [a, b])
    assert f("a1") == "b0"
    assert h.check_tracking(f)
    bad = h.parse_morphism("(morphism g (source A) (target B) (map (a0 b0) (a1 b0)) (tracking (app (app S K) K)))", [a, b])
    assert h.check_tracking(bad).kind == "fails"
    assert len(h.product(a, b).carrier) == 2
    assert h.is_partitioned(h.nno(3))


@pytest.mark.parametrize("name", h.DEMOS)
def test_demos_pass(name):
    r = h.demo(name)
    assert r["failed"] == 0 and r["unknown"] == 0
    assert r["passed"] > 0


def test_build_tree_module_when_requested():
    import os

    build = os.environ.get("HERBRAND_PYTHON_DIR")
    if build:
        assert h._core.__file__.startswith(build)
