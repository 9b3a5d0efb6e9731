import random

import pytest

from micropub.anchoring import (
    AnnotationTarget,
    Selector,
    SelectorKind,
    make_target,
    quote_selector_for,
    reanchor,
    resolve_selector,
)
from micropub.errors import AnchorError, Ambiguous, CannotDisambiguate, LostAnchor, NotFound, OutOfRange

from generators import random_document, random_edit, random_span
from oracles import minimal_context, quote_hits

TEXT = "the cat sat on the mat and the cat ran"


def test_quote_unique():
    assert resolve_selector(TEXT, Selector.quote("sat")) == (8, 11)


def test_quote_needs_context():
    with pytest.raises(Ambiguous):
        resolve_selector(TEXT, Selector.quote("cat"))
    assert resolve_selector(TEXT, Selector.quote("cat", "and the ", "")) == (31, 34)


def test_quote_missing():
    with pytest.raises(NotFound):
        resolve_selector(TEXT, Selector.quote("dog"))


def test_position_out_of_range():
    with pytest.raises(OutOfRange):
        resolve_selector(TEXT, Selector.position(30, 100))


def test_selector_shape_checked():
    with pytest.raises(AnchorError):
        Selector.quote("")
    with pytest.raises(AnchorError):
        Selector.position(5, 5)
    with pytest.raises(AnchorError):
        AnnotationTarget("doc", ())


def test_minimal_context_chosen():
    sel = quote_selector_for(TEXT, (4, 7))
    assert (sel.prefix, sel.suffix) == ("e ", " s")
    assert quote_selector_for(TEXT, (8, 11)) == Selector.quote("sat")


def test_cannot_disambiguate():
    with pytest.raises(CannotDisambiguate):
        quote_selector_for("abab abab", (0, 2), context_cap=1)
    with pytest.raises(OutOfRange):
        quote_selector_for(TEXT, (5, 500))


def test_disagreeing_selectors():
    target = AnnotationTarget("d", (Selector.position(0, 3), Selector.quote("sat")))
    with pytest.raises(AnchorError):
        target.resolve(TEXT)


def test_reanchor_after_insertion():
    target = make_target(TEXT, "d", (8, 11))
    new = "well, " + TEXT
    moved = reanchor(TEXT, new, target)
    assert moved.resolve(new) == (14, 17)


def test_reanchor_lost():
    target = make_target(TEXT, "d", (8, 11))
    with pytest.raises(LostAnchor):
        reanchor(TEXT, TEXT.replace("sat", "stood"), target)
    with pytest.raises(LostAnchor):
        reanchor(TEXT, TEXT.replace("sat", "sat sat"), target)


@pytest.mark.parametrize("seed", range(1000))
def test_make_target_round_trip(seed):
    rng = random.Random(seed)
    text = random_document(rng)
    span = random_span(rng, text)
    k = minimal_context(text, span, 32)
    if k is None:
        with pytest.raises(CannotDisambiguate):
            make_target(text, "doc", span)
        return
    target = make_target(text, "doc", span)
    assert target.resolve(text) == span
    quote = target.selector(SelectorKind.TEXT_QUOTE)
    assert quote.exact == text[span[0] : span[1]]
    assert max(len(quote.prefix), len(quote.suffix)) <= k


def expected_reanchor(new, quote):
    """Where the quote should land in ``new``, or None for a lost anchor."""
    hits = quote_hits(new, quote.exact, quote.prefix, quote.suffix)
    if len(hits) == 1:
        return hits[0], hits[0] + len(quote.exact)
    bare = quote_hits(new, quote.exact)
    if len(bare) == 1:
        return bare[0], bare[0] + len(quote.exact)
    return None


@pytest.mark.parametrize("seed", range(1000))
def test_reanchor_against_oracle(seed):
    rng = random.Random(10_000 + seed)
    text = random_document(rng)
    span = random_span(rng, text)
    if minimal_context(text, span, 32) is None:
        return
    target = make_target(text, "doc", span)
    new = random_edit(rng, text)
    want = expected_reanchor(new, target.selector(SelectorKind.TEXT_QUOTE))
    if want is None:
        with pytest.raises(LostAnchor):
            reanchor(text, new, target)
    else:
        moved = reanchor(text, new, target)
        assert moved.resolve(new) == want
        assert new[want[0] : want[1]] == text[span[0] : span[1]]
