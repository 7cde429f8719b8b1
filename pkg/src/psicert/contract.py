"""Equivariant contractions of tensor slots and assembly of the invariant matrix.

The degree-2 form omega0 = sum_i (a_i b_i - b_i a_i) is the symplectic
class inside H tensor H.  A ContractionSpec pairs up all but one slot of an
odd-degree tensor and returns the remaining slot scaled by the product of
slotwise intersection numbers; the default spec pairs consecutive slots
(1,2),(3,4),... and outputs the last, which on degree k+1 is the map used
at even levels k.  At odd levels the cochain is first squared through the
derivation, then contracted in degree 2k+1.

theta is the slotwise involution a_i -> b_i, b_i -> -a_i; pairing a tensor
against theta of itself is positive definite, which is what makes the
slotwise pairing nondegenerate on every graded piece.
"""
from __future__ import annotations

from dataclasses import dataclass

from .homology import HVector, IntMatrix
from .johnson import JohnsonCochain, tau_squared
from .tensors import TruncatedTensor


def symbol_intersection(p: int, q: int) -> int:
    """Intersection number of basis symbols: <a_j, b_j> = 1, <b_j, a_j> = -1."""
    if p % 2 == 1 and q == p + 1:
        return 1
    if p % 2 == 0 and q == p - 1:
        return -1
    return 0


@dataclass(frozen=True)
class ContractionSpec:
    """Slot-pairing datum: 1-indexed pairs plus the output slot, partitioning 1..2n+1."""

    pairs: tuple[tuple[int, int], ...]
    output: int

    def __post_init__(self):
        slots = [s for p in self.pairs for s in p] + [self.output]
        if sorted(slots) != list(range(1, len(slots) + 1)):
            raise ValueError("pairs and output must partition slots 1..2n+1")

    @property
    def arity(self) -> int:
        return 2 * len(self.pairs) + 1

    @staticmethod
    def default(arity: int) -> "ContractionSpec":
        if arity < 1 or arity % 2 == 0:
            raise ValueError("arity must be odd and positive")
        pairs = tuple((2 * j + 1, 2 * j + 2) for j in range(arity // 2))
        return ContractionSpec(pairs, arity)

    def to_json_obj(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs], "output": self.output}

    @staticmethod
    def from_json_obj(obj: dict) -> "ContractionSpec":
        pairs = tuple((int(p[0]), int(p[1])) for p in obj["pairs"])
        return ContractionSpec(pairs, int(obj["output"]))


def omega0(genus: int) -> TruncatedTensor:
    """The symplectic form as a degree-2 tensor: sum_i (a_i b_i - b_i a_i)."""
    terms = {}
    for j in range(genus):
        a, b = 2 * j + 1, 2 * j + 2
        terms[(a, b)] = 1
        terms[(b, a)] = -1
    return TruncatedTensor(genus, 2, terms)


def phi_contract(t: TruncatedTensor, spec: ContractionSpec) -> HVector:
    """Contract a homogeneous tensor of degree = spec.arity down to H."""
    m = spec.arity
    coords = [0] * (2 * t.genus)
    for word, coeff in t.terms.items():
        if len(word) != m:
            raise ValueError(f"tensor degree {len(word)} does not match contraction arity {m}")
        sign = 1
        for p, q in spec.pairs:
            sign *= symbol_intersection(word[p - 1], word[q - 1])
            if sign == 0:
                break
        if sign:
            coords[word[spec.output - 1] - 1] += coeff * sign
    return HVector(t.genus, tuple(coords))


def theta(t: TruncatedTensor) -> TruncatedTensor:
    """Slotwise involution a_i -> b_i, b_i -> -a_i, extended multiplicatively."""
    out: dict[tuple[int, ...], int] = {}
    for word, coeff in t.terms.items():
        sign = 1
        new = []
        for s in word:
            if s % 2 == 1:
                new.append(s + 1)
            else:
                new.append(s - 1)
                sign = -sign
        key = tuple(new)
        v = out.get(key, 0) + coeff * sign
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return TruncatedTensor(t.genus, t.truncation, out)


def tensor_pairing(s: TruncatedTensor, t: TruncatedTensor) -> int:
    """Slotwise intersection pairing of two homogeneous tensors of equal degree."""
    ds = s.max_degree() if not s.is_zero() else None
    dt = t.max_degree() if not t.is_zero() else None
    if s.is_zero() or t.is_zero():
        return 0
    if not s.is_homogeneous(ds) or not t.is_homogeneous(dt) or ds != dt:
        raise ValueError("operands must be homogeneous of equal degree")
    total = 0
    for word, coeff in s.terms.items():
        # the only basis word pairing nontrivially with `word` is its slotwise partner
        partner = tuple(p + 1 if p % 2 == 1 else p - 1 for p in word)
        other = t.terms.get(partner)
        if other is None:
            continue
        sign = 1
        for p in word:
            if p % 2 == 0:
                sign = -sign
        total += coeff * other * sign
    return total


def diagonal_action(m: IntMatrix, t: TruncatedTensor) -> TruncatedTensor:
    """Apply a matrix on H to every slot of a tensor (the diagonal action)."""
    n = 2 * t.genus
    if m.dimension != n:
        raise ValueError("matrix dimension must be 2*genus")
    acc: dict[tuple[int, ...], int] = {}
    for word, coeff in t.terms.items():
        partial = {(): coeff}
        for s in word:
            col = m.column(s - 1)
            new: dict[tuple[int, ...], int] = {}
            for w, c in partial.items():
                for p, entry in enumerate(col):
                    if not entry:
                        continue
                    key = w + (p + 1,)
                    v = new.get(key, 0) + c * entry
                    if v:
                        new[key] = v
                    else:
                        new.pop(key, None)
            partial = new
        for w, c in partial.items():
            v = acc.get(w, 0) + c
            if v:
                acc[w] = v
            else:
                acc.pop(w, None)
    return TruncatedTensor(t.genus, t.truncation, acc)


def psi_matrix(c: JohnsonCochain, k: int, spec: ContractionSpec | None = None) -> IntMatrix:
    """The level-k invariant matrix of a cochain of weight k+1.

    Even k contracts the cochain directly in degree k+1; odd k first squares
    it through the derivation and contracts in degree 2k+1.  Columns are the
    images of the ordered basis vectors.
    """
    if k < 1:
        raise ValueError("level k must be at least 1")
    if c.weight != k + 1:
        raise ValueError(f"cochain weight {c.weight} does not match level {k} (need {k + 1})")
    target = c if k % 2 == 0 else tau_squared(c)
    arity = k + 1 if k % 2 == 0 else 2 * k + 1
    if arity % 2 == 0:
        raise ValueError("internal parity error: contraction arity must be odd")
    if spec is None:
        spec = ContractionSpec.default(arity)
    if spec.arity != arity:
        raise ValueError(f"contraction spec arity {spec.arity} does not match degree {arity}")
    cols = [phi_contract(img, spec).coords for img in target.images]
    return IntMatrix.from_columns(cols)
