"""
Factory for creating target-specific verifiers.
"""
import logging
from typing import Dict, List, Optional, Type

from ..errors import PreconditionError
from ..models.config import EngineConfig, VerifyOptions
from .asymptotic import Eq1Verifier, Eq5Verifier, MomentsVerifier, Theorem3Verifier, Theorem4Verifier
from .base import BaseVerifier
from .kfree import Eq2Verifier, Eq12Verifier, Lemma2Verifier
from .primes import Eq7Verifier, Eq9Verifier

logger = logging.getLogger(__name__)


class VerifierFactory:
    """Factory for creating target-specific verifiers."""
    VERIFIERS: Dict[str, Type[BaseVerifier]] = {
        verifier.name: verifier
        for verifier in (
            Theorem3Verifier,
            Theorem4Verifier,
            Eq1Verifier,
            Eq2Verifier,
            Eq5Verifier,
            Eq7Verifier,
            Eq9Verifier,
            Eq12Verifier,
            Lemma2Verifier,
            MomentsVerifier,
        )
    }

    @classmethod
    def targets(cls) -> List[str]:
        return list(cls.VERIFIERS)

    @classmethod
    def create_verifier(cls, options: VerifyOptions,
                        engine: Optional[EngineConfig] = None) -> BaseVerifier:
        verifier_class = cls.VERIFIERS.get(options.target)
        if not verifier_class:
            raise PreconditionError(
                f"unknown verify target {options.target!r}; choose from {', '.join(cls.VERIFIERS)}"
            )
        logger.debug(f"Using {verifier_class.__name__} for {options.target}")
        return verifier_class(options, engine)
