class LieToriError(Exception):
    """
    Base exception for all lietori errors.
    """


class CyclotomicError(LieToriError):
    """
    Invalid cyclotomic arithmetic: a zero or negative order, operands of
    different orders, or division by zero.
    """


class LatticeError(LieToriError):
    """
    An integer lattice operation was given inconsistent input (generator
    lengths that do not match the ambient rank) or asked for something that
    does not exist (coset representatives of an infinite quotient).
    """


class TorusError(LieToriError):
    """
    An associative torus or its involution could not be built, usually
    because a quantum factor is degenerate or the involution data is not a
    period-2 anti-automorphism.
    """


class RootSystemError(LieToriError):
    """
    A set of vectors is not an irreducible crystallographic root system.
    """


class ConstructionError(LieToriError):
    """
    Base exception for inadmissible Lie torus construction parameters.
    """


class RankExclusionError(ConstructionError):
    """
    The rank r is excluded for the requested family and torus parameters.
    """


class TooFewExtraIndicesError(ConstructionError):
    """
    A special unitary construction has too few hermitian form entries (m)
    for its rank and torus.
    """


class NonHermitianDeltaError(ConstructionError):
    """
    A degree used for the hermitian form is not in the support of the
    hermitian elements of the torus, or the first degree is not zero.
    """


class DeltaCollisionError(ConstructionError):
    """
    Two hermitian form degrees agree modulo twice the lattice.
    """


class DegreeNotInLatticeError(ConstructionError):
    """
    A requested degree does not lie in the grading lattice of the model.
    """


class InvariantError(LieToriError):
    """
    An invariant could not be computed consistently, for example because
    roots of the same length gave different ranks.
    """


class CosetBudgetExceeded(InvariantError):
    """
    The index of the centroid support in the grading lattice is larger than
    the permitted coset budget.
    """


class InvalidModelFile(LieToriError):
    """
    A model file is not valid JSON, has the wrong schema version, or has
    parameters that cannot be interpreted.
    """
