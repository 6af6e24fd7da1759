"""Exact iterated harmonic numbers, generalized Euler constants and p-adic scans."""

from fractions import Fraction

try:
    from . import _harmoniter as _core
except ImportError:  # in-tree build: the extension sits next to the package
    import _harmoniter as _core

__version__ = _core.__version__

HarmoniterError = _core.HarmoniterError
NotPrime = _core.NotPrime
EmptyInput = _core.EmptyInput
DomainError = _core.DomainError
Overflow = _core.Overflow
UnsupportedOrder = _core.UnsupportedOrder
ResourceLimit = _core.ResourceLimit
PrecisionLoss = _core.PrecisionLoss
CorruptCheckpoint = _core.CorruptCheckpoint
VersionMismatch = _core.VersionMismatch
InternalError = _core.InternalError

hyperpower_e = _core.hyperpower_e
start_index = _core.start_index
ln_iter = _core.ln_iter
l_step_sum = _core.l_step_sum
gamma_classic = _core.gamma_classic
gamma_j_estimate = _core.gamma_j_estimate
gamma_j_prime_estimate = _core.gamma_j_prime_estimate
denominator_valuation_scan = _core.denominator_valuation_scan
integrality_check = _core.integrality_check
theisinger_witness = _core.theisinger_witness
kurschak_witness = _core.kurschak_witness
inequality_threshold = _core.inequality_threshold


def _text(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def h_eval(j, n):
    """h_j(n) as an exact Fraction."""
    return Fraction(_core.h_eval(j, n))


def h_levels(j, n):
    """[h_1(n), ..., h_j(n)]."""
    return [Fraction(s) for s in _core.h_levels(j, n)]


def hyperharmonic(k, n):
    return Fraction(_core.hyperharmonic(k, n))


def cesaro_sum(terms, order):
    """(C, order) mean of the finite series `terms` (order 0, 1 or 2)."""
    return Fraction(_core.cesaro_sum([_text(t) for t in terms], order))


def valuation(q, p):
    """nu_p(q); None for q == 0."""
    return _core.valuation(_text(q), p)


def format_decimal(q, digits=12):
    return _core.format_decimal(_text(q), digits)
