"""aspectmine: mine product aspects from review corpora, score their
sentiment with a distance-weighted opinion lexicon, bucketize them with Kano
survey votes, and render prioritized comparison reports."""

from pathlib import Path

__version__ = "0.1.0"

_DATA_DIR = Path(__file__).parent / "data"


def data_path(*parts: str) -> Path:
    """Path to a bundled data file (starter lexicon, synthetic corpus, samples)."""
    return _DATA_DIR.joinpath(*parts)
