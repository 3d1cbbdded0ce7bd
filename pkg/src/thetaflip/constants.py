# flip tree
MAX_BALL_RADIUS = 12

# euclid
SUBTRACTIVE_ORACLE_CUTOFF = 10**6

# verification defaults
DEFAULT_SEED = 20240229
DEFAULT_RECIPROCITY_PMAX = 500
DEFAULT_LEADING_VERTEX_PMAX = 60
DEFAULT_ORACLE_RADIUS = 8
DEFAULT_BALL_SIZE_RADIUS = 10
DEFAULT_GROUP_LAW_SAMPLES = 1000
DEFAULT_WORD_LENGTH = 8
DEFAULT_POWER_LAW_SAMPLES = 50
DEFAULT_POWER_LAW_KMAX = 5
DEFAULT_FAREY_PMAX = 100
DEFAULT_FAREY_ORACLE_DENOMINATOR = 30
DEFAULT_MOEBIUS_SAMPLES = 500
DEFAULT_LENS_TWIST_PMAX = 50
DEFAULT_LENS_ORBIT_PMAX = 200
DEFAULT_CENSUS_SAMPLES = 100
DEFAULT_HOMOLOGY_SAMPLES = 200
DEFAULT_DISPLACEMENT_RADIUS = 6
DEFAULT_DISPLACEMENT_SAMPLES = 30
DEFAULT_CONJUGACY_SAMPLES = 100
TWIST_WINDOW_PMAX = 12

# lens twist search
TWIST_DESCENT_MAX_STEPS = 10_000

# conjectured complexity floors
TORUS_BUNDLE_FLOOR = 6
TORUS_BUNDLE_SHIFT = 5
LENS_SHIFT = 3
SMALL_LENS_MAX_P = 3
