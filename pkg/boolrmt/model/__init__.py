from .entries import EntryModel, GeneralEntries, BDiagonalEntries, SelfAdjointEntries
from .entries import selfadjoint_letter
from .product import TaggedWord, boolean_product_moment, entry_word_moment
from .product import product_of_boolean_letters_law, product_law_violations, lemma_split_holds
