"""Filtration depth and the Johnson-type invariants of free-group endomorphisms.

For an endomorphism f acting trivially on the first k nilpotent quotients,
the map x -> f(x) x^{-1} induces a homomorphism from H to the degree-(k+1)
layer of the free Lie algebra; computationally, the image of a basis vector
is the degree-(k+1) graded part of the Magnus expansion of f(x) x^{-1}.
The cochain extends uniquely to a derivation of the tensor algebra, which
is how the squared invariant (needed at odd levels) is computed.

Weight-2 cochains can also be built directly from trivector data: the class
u ^ v ^ w acts by x -> <u,x>[v,w] + <v,x>[w,u] + <w,x>[u,v], extended
linearly (the sign and scale of this identification are pinned by the
bundled worked examples).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DepthError, GenusMismatchError, TruncationError
from .homology import HVector, intersection
from .tensors import TruncatedTensor, dynkin_is_lie, graded_part, lie_bracket, magnus_expand
from .words import FreeEndomorphism, apply_endo, generator


@dataclass(frozen=True)
class JohnsonCochain:
    """A linear map H -> H^{(weight)}, one homogeneous image per basis vector."""

    genus: int
    weight: int
    images: tuple[TruncatedTensor, ...]

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError("weight must be positive")
        if len(self.images) != 2 * self.genus:
            raise ValueError("need one image per basis vector")
        for img in self.images:
            if img.genus != self.genus:
                raise GenusMismatchError("image tensor has wrong genus")
            if img.truncation != self.weight:
                raise ValueError("images must be carried at truncation = weight")
            if not img.is_homogeneous(self.weight):
                raise ValueError(f"image not homogeneous of degree {self.weight}")
            if not dynkin_is_lie(img):
                raise ValueError("image fails the Lie-membership check")

    @staticmethod
    def zero(genus: int, weight: int) -> "JohnsonCochain":
        z = TruncatedTensor.zero(genus, weight)
        return JohnsonCochain(genus, weight, (z,) * (2 * genus))

    def image_of(self, position: int) -> TruncatedTensor:
        """Image of the 0-based basis position."""
        return self.images[position]

    def __add__(self, other: "JohnsonCochain") -> "JohnsonCochain":
        if self.genus != other.genus:
            raise GenusMismatchError(f"genus {self.genus} vs {other.genus}")
        if self.weight != other.weight:
            raise ValueError(f"weight {self.weight} vs {other.weight}")
        return JohnsonCochain(self.genus, self.weight,
                              tuple(a + b for a, b in zip(self.images, other.images)))

    def __sub__(self, other: "JohnsonCochain") -> "JohnsonCochain":
        return self + other.scale(-1)

    def scale(self, k: int) -> "JohnsonCochain":
        return JohnsonCochain(self.genus, self.weight, tuple(img.scale(k) for img in self.images))

    def is_zero(self) -> bool:
        return all(img.is_zero() for img in self.images)

    def to_json_obj(self) -> dict:
        return {"weight": self.weight,
                "images": [img.to_json_obj() for img in self.images]}


@dataclass(frozen=True)
class DepthResult:
    """Filtration depth: `value` exactly if `exact`, otherwise depth >= value."""

    value: int
    exact: bool

    def at_least(self, k: int) -> bool:
        return self.value >= k

    def to_json_obj(self) -> dict:
        return {"value": self.value, "exact": self.exact}

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">= {self.value}"


def filtration_depth(f: FreeEndomorphism, max_k: int) -> DepthResult:
    """Largest k <= max_k with all Magnus terms of f(x)x^{-1} - 1 vanishing in degrees 1..k.

    Expands to degree max_k + 1, so a first nonzero term there still yields
    an exact answer; otherwise the result is the lower bound max_k.
    """
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    truncation = max_k + 1
    first_nonzero = None
    for i in range(1, 2 * f.genus + 1):
        g = generator(f.genus, i)
        w = apply_endo(f, g) * g.inverse()
        if w.is_identity():
            continue
        expansion = magnus_expand(w, truncation)
        expansion = expansion - TruncatedTensor.unit(f.genus, truncation)
        d = expansion.min_degree()
        if d is not None and (first_nonzero is None or d < first_nonzero):
            first_nonzero = d
    if first_nonzero is None:
        return DepthResult(max_k, exact=False)
    return DepthResult(first_nonzero - 1, exact=True)


def tau_on_H(f: FreeEndomorphism, k: int) -> JohnsonCochain:
    """Johnson cochain of f at level k; requires depth(f) >= k.

    The image of basis vector x is the degree-(k+1) part of the Magnus
    expansion of f(x) x^{-1}; lower positive degrees must vanish, else
    DepthError is raised.
    """
    if k < 1:
        raise ValueError("level k must be at least 1")
    truncation = k + 1
    images = []
    for i in range(1, 2 * f.genus + 1):
        g = generator(f.genus, i)
        w = apply_endo(f, g) * g.inverse()
        expansion = magnus_expand(w, truncation) - TruncatedTensor.unit(f.genus, truncation)
        d = expansion.min_degree()
        if d is not None and d <= k:
            raise DepthError(
                f"endomorphism depth is at most {d - 1} < {k}: generator {i} image has a "
                f"degree-{d} term")
        images.append(graded_part(expansion, truncation))
    return JohnsonCochain(f.genus, truncation, tuple(images))


def derivation_apply(c: JohnsonCochain, t: TruncatedTensor) -> TruncatedTensor:
    """Leibniz extension of the cochain applied to a tensor.

    Each slot of each basis word is replaced in turn by its image under c,
    raising the degree by weight - 1 per replacement; the input truncation
    must accommodate that.
    """
    if c.genus != t.genus:
        raise GenusMismatchError(f"genus {c.genus} vs {t.genus}")
    lift = c.weight - 1
    if t.max_degree() + lift > t.truncation:
        raise TruncationError(
            f"derivation raises degree to {t.max_degree() + lift} beyond truncation {t.truncation}")
    out: dict[tuple[int, ...], int] = {}
    for word, coeff in t.terms.items():
        for j, s in enumerate(word):
            for cw, cc in c.images[s - 1].terms.items():
                key = word[:j] + cw + word[j + 1:]
                v = out.get(key, 0) + coeff * cc
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
    return TruncatedTensor(t.genus, t.truncation, out)


def tau_squared(c: JohnsonCochain) -> JohnsonCochain:
    """The derivation applied to the cochain's own images: weight k+1 -> 2k+1."""
    new_weight = 2 * c.weight - 1
    images = []
    for img in c.images:
        lifted = img.with_truncation(new_weight)
        images.append(derivation_apply(c, lifted))
    return JohnsonCochain(c.genus, new_weight, tuple(images))


WedgeTerm = tuple[int, tuple[HVector, HVector, HVector]]


def cochain_from_wedge3(genus: int, terms) -> JohnsonCochain:
    """Weight-2 cochain of a sum of coefficient-weighted wedge triples."""
    terms = list(terms)
    for _, (u, v, w) in terms:
        for vec in (u, v, w):
            if vec.genus != genus:
                raise GenusMismatchError("wedge vector has wrong genus")
    images = []
    for p in range(2 * genus):
        x = HVector.basis(genus, p)
        img = TruncatedTensor.zero(genus, 2)
        for coeff, (u, v, w) in terms:
            tu = TruncatedTensor.from_hvector(u, 2)
            tv = TruncatedTensor.from_hvector(v, 2)
            tw = TruncatedTensor.from_hvector(w, 2)
            img = img + lie_bracket(tv, tw).scale(coeff * intersection(u, x))
            img = img + lie_bracket(tw, tu).scale(coeff * intersection(v, x))
            img = img + lie_bracket(tu, tv).scale(coeff * intersection(w, x))
        images.append(img)
    return JohnsonCochain(genus, 2, tuple(images))


def bp_tau(genus: int, index: int) -> JohnsonCochain:
    """Johnson cochain of the standard bounding-pair map: (sum_{j<i} a_j^b_j)^b_i.

    index = 1 gives the empty sum, hence the zero cochain; indices outside
    1..genus are errors.
    """
    if not 1 <= index <= genus:
        raise ValueError(f"bounding-pair index must be in 1..genus, got {index}")
    b_i = HVector.basis(genus, 2 * (index - 1) + 1)
    terms = []
    for j in range(1, index):
        a_j = HVector.basis(genus, 2 * (j - 1))
        b_j = HVector.basis(genus, 2 * (j - 1) + 1)
        terms.append((1, (a_j, b_j, b_i)))
    return cochain_from_wedge3(genus, terms)
