import re
from typing import List

_TOKEN = re.compile(r"[^\W_]+")


def tokenize(text: str) -> List[str]:
    """
    Lowercase a text and split it on whitespace and punctuation.

    Punctuation and underscores are discarded, so "I'm going carefully." gives
    ["i", "m", "going", "carefully"].
    """
    return _TOKEN.findall(text.lower())
