"""
Built-in verification catalog.

Static parameters for the `verify` command: which family instances and
products make up the equivalence sweep, and the fixed cases each claim
checks. Nothing here is computed; the runner reads it.
"""

# Family instances in the sweep, by tag (catalog order)
SWEEP_FAMILIES = {
    "S": list(range(1, 6)),
    "A": list(range(1, 6)),
    "D": list(range(1, 21)),
    "Q": list(range(8, 49, 4)),
    "C": list(range(1, 9)),
    "H": [2, 3, 5],
}

# Every pair (i <= j) of these is added as a direct product when small enough
PRODUCT_BASE = ["S:3", "D:4", "Q:8", "Q:12", "H:2", "C:2", "C:3", "C:4"]

# Sweep groups must number at least this many when the full order bound applies
MIN_SWEEP_SIZE = 60
FULL_SWEEP_ORDER = 200

CLAIM_TITLES = {
    0: "Family presentations",
    1: "Quaternion clique numbers",
    2: "CC theorem for Q:2^n x C:m",
    3: "p-groups by central quotient order",
    4: "AC = matroid = transitive commuting",
    5: "Counting identity",
    6: "Non-matroid witnesses",
    7: "Dihedral matroids",
    8: "k-regular formula",
    9: "Structural lemmas on random graphs",
    10: "Centralizer cover",
    11: "Clique oracle equivalence",
    12: "Chi-graph sanity",
    13: "Subgroup heredity and exchange",
}

# Claim 0: lazy groups whose element products are sampled instead of tabulated
LAZY_SAMPLE_SPECS = ["S:10", "A:10"]
LAZY_PRODUCT_SAMPLES = 1000

# Claim 1: Q_4l for l in this range; search and oracle cross-checks below the limits
QUATERNION_L = list(range(2, 11))
QUATERNION_SEARCH_MAX_L = 6
QUATERNION_ORACLE_MAX_L = 4

# Claim 2: (n, m) for Q:2^n x C:m, and n for the CC check of Q:2^n alone
CC_CASES = [(3, 1), (3, 2), (3, 4), (3, 5), (4, 1), (4, 2), (4, 3), (5, 1), (5, 3)]
CC_QUATERNION_N = [3, 4, 5]

# Claim 3: central quotient p^2, and p^3 with an abelian maximal subgroup
PGROUP_CASE_I_PRIMES = [2, 3, 5]
PGROUP_CASE_III = {"D:8": 5, "Q:16": 5}

# Claim 5: the worked instance of the counting identity
EQ1_INSTANCE = {"spec": "Q:8", "order": 8, "omega": 3, "center": 2, "centralizer_sum": 12}

# Claim 6
NON_MATROID_SPECS = ["S:4", "S:5"]
S4_TRIPLE = ("(3 4)", "(1 2)(3 4)", "(1 3)(2 4)")
A10_TRIPLE = ("(1 2)(3 4)", "(5 6)(7 8)", "(2 3)(9 10)")

# Claim 7
DIHEDRAL_N = list(range(3, 17))

# Claim 8: spec -> expected k-regular clique number (None: not k-regular)
KREGULAR_CASES = {"Q:8": 3, "H:3": 4, "Q:16": None}

# Claim 9
MATROID_GRAPH_TRIALS = 200
MATROID_GRAPH_MAX_VERTICES = 40
CLIQUE_SEEDS_PER_TRIAL = 5
EXCHANGE_GRAPH_TRIALS = 500
EXCHANGE_GRAPH_MAX_VERTICES = 12

# Claim 13
HEREDITY_SUBGROUPS = 20
EXCHANGE_TRIALS = 1000
