"""Shuffle on trajectories for words, languages and posets."""

from .characterize import (
    BlockStructure,
    NotGroupStructured,
    ShuffleInstance,
    ShuffleVerdict,
    block_structure,
    check_lemma2,
    shuffle_semantic,
    shuffle_structural,
)
from .decompose import PosetCover, decompose
from .errors import *  # noqa: F401,F403
from .extraction import extract_order, is_poset_language, reconstruct
from .poset import GroupDecomposition, LPoset, Poset, Relation, groups, hasse, relation, validate
from .shuffle import fits, shuffle_languages, shuffle_words
from .traces import Language, lang, lang_labelled, swap_connected, swap_neighbours

__version__ = "0.1.0"
