"""The four explicit bijections and their inverses."""
from .elevation import DOTTED, elevate, elevate_inverse, multi_elevate, multi_elevate_inverse
from .phi import phi, phi_inverse
from .sigma import decode_pair, encode_pair, sigma, sigma_inverse
from .words import PHI_ALPHABET, Alphabet, SigmaAlphabet, Word

__all__ = [
    "DOTTED",
    "PHI_ALPHABET",
    "Alphabet",
    "SigmaAlphabet",
    "Word",
    "decode_pair",
    "elevate",
    "elevate_inverse",
    "encode_pair",
    "multi_elevate",
    "multi_elevate_inverse",
    "phi",
    "phi_inverse",
    "sigma",
    "sigma_inverse",
]
