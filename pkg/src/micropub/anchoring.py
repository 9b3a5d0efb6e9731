"""Stand-off anchoring of representations in source text.

A representation extracted from a document can carry an
:class:`AnnotationTarget`: the document identifier plus one or more
selectors. Two selector kinds are supported, a quote selector
(``exact`` with optional ``prefix``/``suffix`` context) and a position
selector (a half-open ``[start, end)`` range).

Offsets count Unicode scalar values, which is what indexing a Python
``str`` gives, so they do not depend on the byte encoding of a file.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    Ambiguous,
    AnchorError,
    CannotDisambiguate,
    LostAnchor,
    NotFound,
    OutOfRange,
)

DEFAULT_CONTEXT_CAP = 32

Span = tuple[int, int]


class SelectorKind(enum.Enum):
    TEXT_QUOTE = "TextQuote"
    TEXT_POSITION = "TextPosition"


@dataclass(frozen=True)
class Selector:
    kind: SelectorKind
    exact: str | None = None
    prefix: str = ""
    suffix: str = ""
    start: int | None = None
    end: int | None = None

    def __post_init__(self) -> None:
        if self.kind is SelectorKind.TEXT_QUOTE:
            if not self.exact:
                raise AnchorError("TextQuote selector requires a non-empty exact text")
            if self.start is not None or self.end is not None:
                raise AnchorError("TextQuote selector takes no offsets")
        else:
            if self.start is None or self.end is None:
                raise AnchorError("TextPosition selector requires start and end")
            if self.start < 0 or self.end <= self.start:
                raise AnchorError(f"bad TextPosition range [{self.start}, {self.end})")
            if self.exact is not None or self.prefix or self.suffix:
                raise AnchorError("TextPosition selector takes no quote fields")

    @classmethod
    def quote(cls, exact: str, prefix: str = "", suffix: str = "") -> "Selector":
        return cls(SelectorKind.TEXT_QUOTE, exact=exact, prefix=prefix, suffix=suffix)

    @classmethod
    def position(cls, start: int, end: int) -> "Selector":
        return cls(SelectorKind.TEXT_POSITION, start=start, end=end)


@dataclass(frozen=True)
class AnnotationTarget:
    document_id: str
    selectors: tuple[Selector, ...]

    def __post_init__(self) -> None:
        if not self.document_id:
            raise AnchorError("annotation target needs a document id")
        if not self.selectors:
            raise AnchorError("annotation target needs at least one selector")

    def selector(self, kind: SelectorKind) -> Selector | None:
        for sel in self.selectors:
            if sel.kind is kind:
                return sel
        return None

    def resolve(self, document_text: str) -> Span:
        """Resolve every selector and check that they agree on one span."""
        spans = {resolve_selector(document_text, sel) for sel in self.selectors}
        if len(spans) != 1:
            raise AnchorError(f"selectors disagree on the span: {sorted(spans)}")
        return spans.pop()


def _occurrences(text: str, exact: str) -> list[int]:
    # overlapping matches count, "aa" occurs twice in "aaa"
    found = []
    i = text.find(exact)
    while i != -1:
        found.append(i)
        i = text.find(exact, i + 1)
    return found


def _matches(text: str, start: int, exact: str, prefix: str, suffix: str) -> bool:
    end = start + len(exact)
    if start < len(prefix):
        return False
    return text.startswith(prefix, start - len(prefix)) and text.startswith(suffix, end)


def resolve_selector(document_text: str, sel: Selector) -> Span:
    """Return the unique ``(start, end)`` span a selector designates.

    Raises:
        NotFound: a quote selector matches nowhere.
        Ambiguous: several matches survive prefix/suffix filtering.
        OutOfRange: a position selector runs past the end of the text.
    """
    if sel.kind is SelectorKind.TEXT_POSITION:
        if sel.end > len(document_text):
            raise OutOfRange(f"range [{sel.start}, {sel.end}) exceeds document length {len(document_text)}")
        return (sel.start, sel.end)

    hits = [
        i
        for i in _occurrences(document_text, sel.exact)
        if _matches(document_text, i, sel.exact, sel.prefix, sel.suffix)
    ]
    if not hits:
        raise NotFound(f"quote {sel.exact!r} not found")
    if len(hits) > 1:
        raise Ambiguous(f"quote {sel.exact!r} matches at offsets {hits}")
    return (hits[0], hits[0] + len(sel.exact))


def _check_span(document_text: str, span: Span) -> None:
    start, end = span
    if not 0 <= start < end <= len(document_text):
        raise OutOfRange(f"span {span} not within a document of length {len(document_text)}")


def quote_selector_for(document_text: str, span: Span, context_cap: int = DEFAULT_CONTEXT_CAP) -> Selector:
    """Smallest symmetric context window that makes the quoted text unique."""
    _check_span(document_text, span)
    start, end = span
    exact = document_text[start:end]
    others = [i for i in _occurrences(document_text, exact) if i != start]
    for k in range(context_cap + 1):
        prefix = document_text[max(0, start - k) : start]
        suffix = document_text[end : end + k]
        if not any(_matches(document_text, i, exact, prefix, suffix) for i in others):
            return Selector.quote(exact, prefix, suffix)
    raise CannotDisambiguate(
        f"span {span} is not unique with {context_cap} characters of context"
    )


def make_target(
    document_text: str,
    document_id: str,
    span: Span,
    context_cap: int = DEFAULT_CONTEXT_CAP,
) -> AnnotationTarget:
    """Build a target carrying both a position and a quote selector for ``span``."""
    quote = quote_selector_for(document_text, span, context_cap)
    return AnnotationTarget(document_id, (Selector.position(*span), quote))


def reanchor(
    old_text: str,
    new_text: str,
    target: AnnotationTarget,
    context_cap: int = DEFAULT_CONTEXT_CAP,
) -> AnnotationTarget:
    """Move ``target`` from ``old_text`` onto an edited ``new_text``.

    The quote selector is tried as is first; if its context no longer
    matches, the bare quoted text is accepted when it occurs exactly once
    and fresh context is computed for it.
    """
    old_span = target.resolve(old_text)
    quote = target.selector(SelectorKind.TEXT_QUOTE)
    if quote is None:
        quote = Selector.quote(old_text[old_span[0] : old_span[1]])

    try:
        new_span = resolve_selector(new_text, quote)
    except (NotFound, Ambiguous):
        bare = _occurrences(new_text, quote.exact)
        if len(bare) != 1:
            reason = "quoted text no longer present" if not bare else f"quoted text now occurs {len(bare)} times"
            raise LostAnchor(f"cannot reanchor {quote.exact!r}: {reason}") from None
        new_span = (bare[0], bare[0] + len(quote.exact))
        quote = quote_selector_for(new_text, new_span, context_cap)

    return AnnotationTarget(target.document_id, (Selector.position(*new_span), quote))
