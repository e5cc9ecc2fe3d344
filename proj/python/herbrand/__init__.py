"""Realizability over the combinatory algebra of sequence codes."""

from ._core import (
    Assembly,
    HerbrandError,
    Morphism,
    ParseError,
    Predicate,
    Term,
    Ternary,
    TruthValue,
    apply,
    actual_member,
    bound_from_tracking,
    check_entailment,
    check_tracking,
    conj,
    demo,
    disj,
    exists_transpose_down,
    exists_transpose_up,
    fan_bound,
    forall_transpose_down,
    forall_transpose_up,
    imp,
    is_partitioned,
    lambda_,
    nabla,
    neg,
    nno,
    normalize,
    parse_morphism,
    potential_member,
    product,
    sum,
    synth_compose,
    synth_conj_fst,
    synth_conj_pair,
    synth_conj_snd,
    synth_curry,
    synth_disj_elim,
    synth_disj_inl,
    synth_disj_inr,
    synth_eval,
    synth_identity,
    synth_uncurry,
    tracking_from_bound,
    var,
    wlem_check,
    wlem_realizer,
)

DEMOS = ("wlem", "fan", "koenig", "bounded", "heyting-laws", "pretopos")


def evaluate(text, fuel=10000):
    """Normal form of a term given as text, or None when there is none within `fuel`."""
    return normalize(Term.parse(text), fuel)["value"]
