from ._icplane import (
    Drawing,
    DrawingError,
    enumerate,
    from_canonical,
    gen_G3,
    gen_G4,
    gen_H,
    gen_k2m,
    gen_pdw,
    gen_star,
    parse_icpd,
    search_csv,
    tie_drawing,
)

__all__ = [
    "Drawing",
    "DrawingError",
    "enumerate",
    "from_canonical",
    "gen_G3",
    "gen_G4",
    "gen_H",
    "gen_k2m",
    "gen_pdw",
    "gen_star",
    "parse_icpd",
    "search_csv",
    "tie_drawing",
]
