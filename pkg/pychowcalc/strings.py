"""
ENGLISH language string literals for PyChowCalc

Created on 2 Sep 2026

@author: semuadmin
"""
# pylint: disable=line-too-long

TITLE = "PyChowCalc"

ABOUTTXT = (
    "PyChowCalc is a free, open-source symbolic intersection theory engine"
    + " written entirely in Python."
)

# ring errors
UNKNOWNGENERROR = "Unknown generator {} (expected one of {})"
NEGEXPERROR = "Negative exponent {} for generator {}"
RINGMISMATCHERROR = "Classes belong to different rings ({} and {})"
RULEHOMERROR = "Rewrite rule for {} is not homogeneous"
RULENFERROR = "Rewrite rule for {} has a reducible right hand side {}"
INTTABLEERROR = "Integration table for {} does not match the top degree basis"
REWRITEBOUNDERROR = "Rewrite chain for {} exceeded {} steps"
DIVZEROERROR = "Division by a non-scalar or zero class"
INVERTERROR = "Class with degree 0 part {} cannot be inverted"

# catalog errors
DIMERROR = "{} requires {}, got {}"
DEGREEERROR = "Polarization of {} has degree {} < 1"
PROJERROR = "No projection {} registered on {}"
NEFNOTE = "Polarization {} fails numeric nefness: {} = {} < 0"
VERYAMPLENOTE = "Very ampleness of the polarization is not checked"
ANTICANONNOTE = "The anticanonical polarization of a blow up in {} points is ample but not very ample"

# bundle errors
ATOMRINGERROR = "Atom {} is defined on {}, not on {}"
ATOMSCALARERROR = "Atom {} must have total Chern class starting with 1"
RANKERROR = "Rank must be non-negative, got {}"
EXTRANKERROR = "Exterior powers are supported up to rank {}, got rank {}"
DIVISORERROR = "Twisting class must be homogeneous of degree 1, got {}"
SPINORERROR = "Spinor bundles are registered on quadrics of dimension 2 to 4, not on {}"
SPINORINDEXERROR = "Spinor index must be in {}, got {}"

# analysis errors
CHIERROR = "Euler characteristic {} is not an integer on {}"
KRANGEERROR = "k must satisfy 1 <= k <= {}, got {}"
SEGREERROR = "Top Segre {} disagrees with the closed form {}"
SCHURERROR = "P_{} reduced modulo x2^2 is {}, expected {}"
SCHURDEGERROR = "P_n requires n >= 2, got {}"
ENCAPERROR = "Eagon-Northcott terms need k <= 3, got {}"
ENCONSTERROR = "Hilbert polynomial of a zero dimensional locus is not constant: {}"
ENTOPERROR = "Hilbert polynomial value {} disagrees with top Chern number {}"
RRDIMERROR = "The threefold Riemann-Roch check needs n = 3, got {}"
RRRANKERROR = "The threefold Riemann-Roch check needs rank >= 2, got {}"
PORTEOUSNOTE = "2k+2 = {} exceeds the dimension {}, the class is truncated to zero"
H3NOTE = "Classes above the middle degree on quadrics may be quoted either as multiples of H powers or by line degree; both readings are reported"

# predictor errors and notes
FLAGERROR = "Unknown flag {} (expected one of {})"
NEGINPUTERROR = "{} must be non-negative, got {}"
RANKMISMATCHERROR = "Declared rank {} differs from the bundle rank {}"
RKSERROR = "r = {} < k + s = {} while c_{} is nonzero"
ULRICHSERROR = "Ulrich bundles with s = {} > 0 must have c_2 = 0"
NGE4ERROR = "Flag n_ge_4 set on a variety of dimension {}"
CONFLICTERROR = "Conflicting conclusions {} ({}) and {} ({})"
GGNOTE = "Assumes the bundle is globally generated"
REDUCEDNOTE = "Assumes degeneracy loci are reduced of pure codimension k"
C1CUBENOTE = "c_1^3 = 0 so no exact component count is applied"
ULRICHCONDNOTE = "Ulrich-conditional: chi equals h^0 only under the Ulrich vanishings"

# scenario errors
LEXERROR = "Unexpected character {!r}"
SYNTAXERROR = "Expected {}, found {}"
UNBOUNDERROR = "Unbound {} {}"
REBINDERROR = "Name {} is already bound"
ARITYERROR = "{} takes {} argument(s), got {}"
KWERROR = "{} has no parameter {}"
DUPARGERROR = "{} got multiple values for {}"
MISSINGARGERROR = "{} is missing parameter {}"
ARGKINDERROR = "Parameter {} of {} must be {}"
UNKNOWNCALLERROR = "Unknown {} {}"
POLYVARIETYERROR = "Bundle {} lives on {}, not on {}"

# cli / selftest
FIXTUREDIRERROR = "Fixture directory {} not found"
FIXTUREREADERROR = "Fixture {} could not be read: {}"
FIXTUREPASS = "PASS {}"
FIXTUREFAIL = "FAIL {}: {}"
FIXTUREMISSING = "missing expected file"
ROUNDTRIPFAIL = "pretty printed scenario does not parse back to the same tree"
ORACLEPASS = "PASS oracle {}"
ORACLEFAIL = "FAIL oracle {}"
OPENFILEERROR = "ERROR! File {} could not be opened: {}"
PARSEFAILTXT = "Parse failed: {}"
SELFTESTSUMMARY = "{} of {} checks passed"
NOFIXTURES = "No fixtures match filter {}"
