from .tokenizer import tokenize
from .vocabulary import BowVector, VocabSide, Vocabulary, build_vocab, concat_bows, oov_rate, vectorize
from .featurizer import Featurizer
