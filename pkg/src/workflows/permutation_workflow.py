import logging
from typing import Any, Dict, Sequence

from src.algebra import zperm
from src.algebra.affine_weyl import element_from_word, reduced_word

logger = logging.getLogger(__name__)


def parse_word(text: str) -> tuple:
    """"0,1,2" -> (0, 1, 2); an empty string is the empty word"""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed word {text!r}: expected comma-separated generator indices")


class PermutationWorkflow:
    """Windows of words, and membership checks of windows, for one permutation representation.

    `size` follows the permutation theorems: the window size n for type A
    (root system A_{n-1}), the rank otherwise.
    """

    def __init__(self, kind: str, size: int):
        self.kind = kind
        self.size = size
        self.ctx = zperm.context_for(kind, size)

    def window_of_word(self, word: Sequence[int]) -> zperm.PeriodicPermutation:
        try:
            element = element_from_word(self.ctx, word)
            return zperm.star(self.ctx, element)
        except ValueError:
            raise
        except Exception as e:
            raise RuntimeError(f"Window construction failed: {str(e)}") from e

    def describe(self, word: Sequence[int]) -> Dict[str, Any]:
        window = self.window_of_word(word)
        return {
            "kind": window.kind,
            "size": window.size,
            "period": window.period,
            "word": list(word),
            "window": {str(i): v for i, v in window.as_dict().items()},
            "inline": zperm.format_window_inline(window),
        }

    def check_text(self, text: str) -> Dict[str, Any]:
        """Membership verdict for a serialized window, with a reduced word when accepted"""
        window = zperm.parse_window(text)
        verdict = zperm.check_membership(self.kind, self.size, window)
        result: Dict[str, Any] = {
            "kind": self.kind,
            "size": self.size,
            "accepted": verdict.accepted,
            "reason": verdict.reason,
        }
        if verdict.accepted:
            element = zperm.unstar(self.kind, self.size, window)
            if zperm.star(self.ctx, element) != window:
                raise RuntimeError("Window reconstruction failed: star(unstar(f)) differs from f")
            word = reduced_word(self.ctx, zperm.window_point(window))
            result["word"] = list(word)
            result["length"] = len(word)
            logger.info("window accepted with a reduced word of length %d", len(word))
        return result
