"""Typed initial syntax, substitution and translations between languages."""

from ._initrans import (
    SourceError,
    check,
    languages,
    monad_laws,
    normalize_signature,
    show_language,
    show_translation,
    substitute,
    translate,
    translation_laws,
    translations,
)

__all__ = [
    "SourceError",
    "check",
    "languages",
    "monad_laws",
    "normalize_signature",
    "show_language",
    "show_translation",
    "substitute",
    "translate",
    "translation_laws",
    "translations",
]
