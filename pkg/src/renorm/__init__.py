from src.renorm.renormalizer import (
    SHADOW_PAIRS,
    DecayProfile,
    Renormalizer,
    RenormResult,
    check_involution,
    ghost_decay_profile,
    shadow,
    tails_sum,
)

__all__ = [
    "DecayProfile",
    "RenormResult",
    "Renormalizer",
    "SHADOW_PAIRS",
    "check_involution",
    "ghost_decay_profile",
    "shadow",
    "tails_sum",
]
