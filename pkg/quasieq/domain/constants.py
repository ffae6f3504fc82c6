# Search bounds
AUTOMORPHISM_MAX_ORDER = 12  # Largest group order accepted by automorphisms()
AUTOMORPHISM_FILTER_MAX_ORDER = 8  # Above this, generator-image search replaces permutation filtering
CERTIFICATE_MAX_ORDER = 6  # Largest carrier for linear-certificate search
EXHAUSTIVE_MAX_ORDER = 4  # Largest order for exhaustive Latin-square pair search
MIN_SEARCH_ORDER = 1

# Logging
LOG_LEVEL_DEFAULT = "WARNING"
LOG_FORMAT_DEFAULT = "console"

# Krstic graphs
KRSTIC_MIN_CONNECTIVITY_VERTICES = 4  # 3-connectivity is undefined below this
KRSTIC_BRUTE_FORCE_MAX_VERTICES = 8  # Canonical certificates enumerate all vertex orders
NESTING_LABEL = "nesting"
EQUALITY_LABEL = "equality"

# Generalization
GENERALIZED_SYMBOL_PREFIX = "g"
CANONICAL_VARIABLE_NAMES: tuple[str, ...] = ("x", "y", "u", "v", "w", "z", "s", "t")

# Branch words
ALPHA = "alpha"
BETA = "beta"

# Gemini refutation bank, tried in order
GEMINI_MODEL_BANK: tuple[str, ...] = ("Z2", "Z2xZ2", "Z2xZ2xZ2", "sloop10")

# Steiner triple system on 9 points (lines of the affine plane of order 3), 1-indexed points.
# Point p becomes loop element p; element 0 is the adjoined identity.
STS9_TRIPLES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3),
    (4, 5, 6),
    (7, 8, 9),
    (1, 4, 7),
    (2, 5, 8),
    (3, 6, 9),
    (1, 5, 9),
    (2, 6, 7),
    (3, 4, 8),
    (1, 6, 8),
    (2, 4, 9),
    (3, 5, 7),
)

# Output
JSON_INDENT = 2
