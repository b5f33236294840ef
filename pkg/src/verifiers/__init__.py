from .base import BaseVerifier
from .factory import VerifierFactory

__all__ = ["BaseVerifier", "VerifierFactory"]
