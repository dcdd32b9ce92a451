"""Coefficient maps of the formal Markoff map and the N-variable Vieta action."""

from ._markoff import (
    ResourceError,
    coeff_map,
    domain,
    evaluate,
    f_oracle,
    gen_apply,
    gen_crosscheck,
    gen_scan,
    markoff_number,
    normalize_slope,
    parents,
    parse,
    pascal_edges,
    render_ascii,
    render_svg,
    serialize,
    verify,
    verify_theorem,
    word_to_slopes,
)

__all__ = [
    "ResourceError",
    "coeff_map",
    "domain",
    "evaluate",
    "f_oracle",
    "gen_apply",
    "gen_crosscheck",
    "gen_scan",
    "markoff_number",
    "normalize_slope",
    "parents",
    "parse",
    "pascal_edges",
    "render_ascii",
    "render_svg",
    "serialize",
    "verify",
    "verify_theorem",
    "word_to_slopes",
]
