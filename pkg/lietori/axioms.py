"""
Finite checks of the Lie torus axioms and of the structural lemmas on a
model.

Components, centroid actions and brackets are periodic modulo ``Γ(L)``, so
every check except the sup-norm box scan of LT1 runs over the coset
representatives of ``Γ(L)`` in ``Λ``; those checks are exact rather than
sampled.
"""
import collections
import logging
from typing import Dict, Iterable, List, Sequence

from ._shared import DEFAULT_BOX_RADIUS, JSONSerializable
from .exactnum import SparseRow, rank
from .exceptions import LieToriError
from .lietorus import LieTorusModel, MatElement, bracket, degree_box
from .rootsys import RootSystemInfo, is_positive, pairing
from .torus import Degree
from .zlattice import Sublattice


CHECKS = (
    'LT1', 'LT2_i', 'LT2_ii', 'LT3', 'LT4',
    'centreless', 'domain_lemma', 'inverse_lemma',
)

PASS = 'pass'
FAIL = 'fail'

_logger = logging.getLogger(__name__)


def _result(status: str, witness: JSONSerializable = None) -> Dict:
    result = {'status': status}  # type: Dict[str, JSONSerializable]
    if witness is not None:
        result['witness'] = witness
    return result


def _add(a: Sequence[int], b: Sequence[int], sign: int = 1) -> Degree:
    return tuple(x + sign * y for x, y in zip(a, b))


def span_rank(elements: Iterable[MatElement]) -> int:
    """
    Dimension of the span of some matrices.
    """
    columns = {}  # type: Dict[tuple, int]
    rows = []  # type: List[SparseRow]
    for element in elements:
        row = {}
        for key, coeff in element.flatten().items():
            row[columns.setdefault(key, len(columns))] = coeff
        rows.append(row)
    return rank(rows)


def commutant_dim(basis: Sequence[MatElement],
                  others: Iterable[MatElement]) -> int:
    """
    Dimension of the subspace of ``span(basis)`` commuting with every
    element of ``others``.
    """
    equations = collections.defaultdict(dict)  # type: Dict[tuple, SparseRow]
    for other in others:
        for n, element in enumerate(basis):
            for key, coeff in bracket(element, other).flatten().items():
                row = equations[key]
                row[n] = row[n] + coeff if n in row else coeff
    return len(basis) - rank(equations.values())


def _ad_power(x: MatElement, y: MatElement, power: int) -> MatElement:
    for _ in range(power):
        y = bracket(x, y)
        if not y:
            break
    return y


def _simple_generators(model: LieTorusModel, info: RootSystemInfo,
                       reps: List[Degree]) -> List[MatElement]:
    generators = []
    for root in info.simple_roots:
        for alpha in (root, tuple(-x for x in root)):
            for lam in reps:
                generators.extend(model.component_basis(alpha, lam))
    return generators


# -----------------------------------------------------------------------------
# Individual checks.

def check_lt1(model: LieTorusModel, info: RootSystemInfo,
              box: List[Degree]) -> Dict:
    """
    Nonzero root spaces have components of dimension at most 1 on the box,
    and only roots of the classified system occur.
    """
    for lam in box:
        for alpha in model.candidate_roots():
            if not any(alpha):
                continue
            dim = model.component_dim(alpha, lam)
            if dim > 1 or (dim and alpha not in info.roots):
                return _result(FAIL, {
                    'root': list(alpha), 'degree': list(lam), 'dim': dim,
                })

    return _result(PASS, {'type': str(info.label)})


def check_lt2_i(model: LieTorusModel, info: RootSystemInfo) -> Dict:
    zero = (0,) * model.nullity
    for alpha in info.indivisible():
        if not model.component_basis(alpha, zero):
            return _result(FAIL, {'root': list(alpha)})
    return _result(PASS)


def check_lt2_ii(model: LieTorusModel, info: RootSystemInfo,
                 reps: List[Degree]) -> Dict:
    """
    For each populated ``(α, λ)`` the element ``h = [e, f]`` acts on
    sampled root vectors by ``c/2 · <β, α^∨>`` with ``c`` its eigenvalue on
    ``e``; ``f`` rescaled by ``2/c`` then satisfies the axiom.
    """
    zero = (0,) * model.nullity
    samples = []
    for beta in info.roots:
        for x in model.component_basis(beta, zero):
            samples.append((beta, x))

    for alpha in info.roots:
        minus = tuple(-a for a in alpha)
        for lam in reps:
            e_basis = model.component_basis(alpha, lam)
            if not e_basis:
                continue
            f_basis = model.component_basis(minus, tuple(-x for x in lam))
            witness = {'root': list(alpha), 'degree': list(lam)}
            if len(e_basis) != 1 or len(f_basis) != 1:
                return _result(FAIL, witness)

            e, f = e_basis[0], f_basis[0]
            h = bracket(e, f)
            he = bracket(h, e)
            pos, entry = next(iter(e.entries.items()))
            degree, coeff = next(iter(entry.terms.items()))
            value = he[pos].terms.get(degree)
            if value is None:
                return _result(FAIL, witness)
            c = value / coeff
            if he != e.scale(c):
                return _result(FAIL, witness)

            half = c / 2
            for beta, x in samples + [(minus, f)]:
                n = pairing(beta, alpha)
                expected = x.scale(half * n)
                if bracket(h, x) != expected:
                    witness['sample_root'] = list(beta)
                    return _result(FAIL, witness)

    return _result(PASS)


def check_lt3(model: LieTorusModel, info: RootSystemInfo,
              reps: List[Degree]) -> Dict:
    """
    Every component is spanned by brackets of simple root spaces with
    components one step closer to the zero root, which by induction on the
    height means the root spaces generate ``L``.
    """
    simple = list(info.simple_roots)
    for alpha in [model.zero_root] + list(info.roots):
        if alpha in simple or tuple(-x for x in alpha) in simple:
            continue
        if not any(alpha):
            steps = simple
        elif is_positive(alpha):
            steps = simple
        else:
            steps = [tuple(-x for x in s) for s in simple]

        for lam in reps:
            dim = len(model.component_basis(alpha, lam))
            if not dim:
                continue

            products = []
            for step in steps:
                rest = _add(alpha, step, -1)
                if any(rest) and rest not in info.roots:
                    continue
                for mu in reps:
                    xs = model.component_basis(step, mu)
                    if not xs:
                        continue
                    ys = model.component_basis(rest, _add(lam, mu, -1))
                    products.extend(bracket(x, y) for x in xs for y in ys)

            if span_rank(products) != dim:
                return _result(FAIL, {'root': list(alpha), 'degree': list(lam)})

    return _result(PASS)


def check_lt4(model: LieTorusModel, box: List[Degree]) -> Dict:
    """
    The degrees of the box carrying a nonzero component generate ``Λ``.
    """
    supported = [
        lam for lam in box
        if any(model.component_basis(alpha, lam)
               for alpha in model.candidate_roots())
    ]
    group = Sublattice.from_vectors(model.nullity, supported)
    if group.same_lattice(model.lattice()):
        return _result(PASS)
    return _result(FAIL, {'generated': [list(v) for v in group.basis()]})


def check_centreless(model: LieTorusModel, info: RootSystemInfo,
                     reps: List[Degree]) -> Dict:
    """
    No nonzero element of ``L_0^λ`` commutes with the simple root spaces,
    which generate ``L``. Central elements lie in ``L_0`` since they commute
    with the split toral subalgebra.
    """
    generators = _simple_generators(model, info, reps)
    for lam in reps:
        basis = model.component_basis(model.zero_root, lam)
        if basis and commutant_dim(basis, generators):
            return _result(FAIL, {'degree': list(lam)})
    return _result(PASS)


def _degree_pairs(reps: List[Degree]):
    zero = reps[0]
    pairs = [(lam, zero) for lam in reps]
    pairs.extend((zero, mu) for mu in reps[1:])
    return pairs


def check_domain_lemma(model: LieTorusModel, info: RootSystemInfo,
                       reps: List[Degree]) -> Dict:
    """
    ``ad(x_α)^{-<β,α^∨>} y_β ≠ 0`` whenever the pairing is negative.
    """
    for alpha in info.roots:
        for beta in info.roots:
            n = pairing(beta, alpha)
            if n >= 0:
                continue
            for lam, mu in _degree_pairs(reps):
                for x in model.component_basis(alpha, lam):
                    for y in model.component_basis(beta, mu):
                        if not _ad_power(x, y, int(-n)):
                            return _result(FAIL, {
                                'root': list(alpha), 'degree': list(lam),
                                'other_root': list(beta),
                                'other_degree': list(mu),
                            })
    return _result(PASS)


def check_inverse_lemma(model: LieTorusModel, info: RootSystemInfo,
                        reps: List[Degree]) -> Dict:
    """
    For ``x ∈ L_α^λ`` and ``y ∈ L_{-α}^μ`` nonzero, ``[x, y]`` is a nonzero
    element of degree ``λ + μ``, so it lies in ``L_0^0`` exactly when
    ``μ = -λ``.
    """
    pairs = _degree_pairs(reps) + [
        (lam, tuple(-x for x in lam)) for lam in reps[1:]
    ]
    for alpha in info.roots:
        minus = tuple(-a for a in alpha)
        for lam, mu in pairs:
            total = _add(lam, mu)
            for x in model.component_basis(alpha, lam):
                for y in model.component_basis(minus, mu):
                    z = bracket(x, y)
                    degrees = {model.entry_degree(i, j, d)
                               for (i, j, d) in z.flatten()}
                    if not z or degrees != {total}:
                        return _result(FAIL, {
                            'root': list(alpha), 'degree': list(lam),
                            'other_degree': list(mu),
                        })
    return _result(PASS)


# -----------------------------------------------------------------------------

def verify_axioms(model: LieTorusModel,
                  box_radius: int = DEFAULT_BOX_RADIUS) -> Dict[str, Dict]:
    """
    Check the Lie torus axioms and the structural lemmas on a model.

    :param model: The model.
    :param box_radius: Sup-norm radius (at least 1) of the degree box
        scanned by LT1 and LT4.
    :raise: ValueError for a radius below 1.
    :return: Ordered map from check name to ``{"status": ..., "witness":
        ...}``. Failures are report entries, never exceptions.
    """
    if box_radius < 1:
        raise ValueError('box radius must be at least 1, got {}'.format(
            box_radius))

    _logger.info('verifying {!r} with box radius {}'.format(model, box_radius))
    report = collections.OrderedDict()  # type: Dict[str, Dict]

    try:
        info = model.root_system()
    except LieToriError as e:
        report['LT1'] = _result(FAIL, str(e))
        for name in CHECKS[1:]:
            report[name] = _result(FAIL, 'no root system')
        _logger.warning('{!r}: root support is not a root system: {}'.format(
            model, e))
        return report

    reps = model.coset_reps()
    box = degree_box(model, box_radius)
    report['LT1'] = check_lt1(model, info, box)

    report['LT2_i'] = check_lt2_i(model, info)
    report['LT2_ii'] = check_lt2_ii(model, info, reps)
    report['LT3'] = check_lt3(model, info, reps)
    report['LT4'] = check_lt4(model, box)
    report['centreless'] = check_centreless(model, info, reps)
    report['domain_lemma'] = check_domain_lemma(model, info, reps)
    report['inverse_lemma'] = check_inverse_lemma(model, info, reps)

    for name, result in report.items():
        log = _logger.info if result['status'] == PASS else _logger.warning
        log('{!r}: {} {}'.format(model, name, result['status']))

    return report


def report_passed(report: Dict[str, Dict]) -> bool:
    return all(result['status'] == PASS for result in report.values())
