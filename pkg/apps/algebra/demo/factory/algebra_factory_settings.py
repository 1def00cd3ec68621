RANDOM_ALGEBRAS_COUNT = 200
ELEMENTS_PER_ALGEBRA = 5
MIN_RANDOM_DIM = 2
MAX_RANDOM_DIM = 6
MAX_TUPLE_LENGTH = 4
