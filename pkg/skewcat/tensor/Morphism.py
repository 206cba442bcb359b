# vim: ts=4:sw=4:expandtabs

import logging

from django.utils.translation import gettext_lazy as _
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .GenSpace import GenSpace
from .TensorException import ShapeError, WordMismatch
from .TensorWord import TensorWord
from .scalars import ONE, ZERO, format_scalar, to_scalar


logger = logging.getLogger(__name__)


def _as_word(value):
    if isinstance(value, TensorWord):
        return value
    if isinstance(value, GenSpace):
        return TensorWord.of(value)
    return TensorWord(value)


def _sparse(rows, shape):
    """
    Build a sparse DomainMatrix from {row: {col: scalar}}, dropping zeros.
    """
    clean = {}
    for i, row in rows.items():
        kept = {j: v for j, v in row.items() if v != ZERO}
        if kept:
            clean[i] = kept
    return DomainMatrix(clean, shape, QQ)


class Morphism(object):
    """
    An exact rational matrix dom -> cod. Columns are indexed by the flattened basis of
    dom, rows by that of cod; the leftmost tensor factor is the most significant digit.
    """
    __slots__ = ('dom', 'cod', 'matrix')

    def __init__(self, dom, cod, matrix):
        dom, cod = _as_word(dom), _as_word(cod)
        if tuple(matrix.shape) != (cod.dim, dom.dim):
            msg = _('Matrix of shape {shape} does not fit {dom} -> {cod}.')
            raise ShapeError(msg.format(shape=matrix.shape, dom=dom, cod=cod))

        object.__setattr__(self, 'dom', dom)
        object.__setattr__(self, 'cod', cod)
        object.__setattr__(self, 'matrix', matrix.to_sparse())

    def __setattr__(self, key, value):
        raise AttributeError('Morphism is immutable.')

    # ---------------------------------------------------------------- constructors

    @classmethod
    def from_entries(cls, dom, cod, entries):
        dom, cod = _as_word(dom), _as_word(cod)
        rows = {}
        for i, row in entries.items():
            rows[i] = {j: to_scalar(v) for j, v in row.items()}
        return cls(dom, cod, _sparse(rows, (cod.dim, dom.dim)))

    @classmethod
    def from_rows(cls, dom, cod, rows):
        """
        Build from a dense list of rows (strings, ints or rationals).
        """
        dom, cod = _as_word(dom), _as_word(cod)
        if len(rows) != cod.dim:
            msg = _('Expected {expected} rows for {cod}, got {got}.')
            raise ShapeError(msg.format(expected=cod.dim, cod=cod, got=len(rows)))

        entries = {}
        for i, row in enumerate(rows):
            if len(row) != dom.dim:
                msg = _('Row {index} has {got} entries; {dom} needs {expected}.')
                raise ShapeError(msg.format(index=i, got=len(row), dom=dom, expected=dom.dim))
            entries[i] = {j: v for j, v in enumerate(row)}
        return cls.from_entries(dom, cod, entries)

    @classmethod
    def from_function(cls, dom, cod, column):
        """
        Build from a function mapping a dom basis index to {cod index: scalar}.
        """
        dom, cod = _as_word(dom), _as_word(cod)
        rows = {}
        for j in range(dom.dim):
            for i, v in column(j).items():
                v = to_scalar(v)
                if v != ZERO:
                    rows.setdefault(i, {})
                    rows[i][j] = rows[i].get(j, ZERO) + v
        return cls(dom, cod, _sparse(rows, (cod.dim, dom.dim)))

    @classmethod
    def identity(cls, word):
        word = _as_word(word)
        return cls(word, word, _sparse({i: {i: ONE} for i in range(word.dim)}, (word.dim, word.dim)))

    @classmethod
    def zero(cls, dom, cod):
        dom, cod = _as_word(dom), _as_word(cod)
        return cls(dom, cod, _sparse({}, (cod.dim, dom.dim)))

    # ---------------------------------------------------------------- access

    def entries(self):
        """
        Nonzero entries as {row: {col: scalar}}.
        """
        rep = self.matrix.rep
        return {i: dict(row) for i, row in rep.items() if row}

    def column(self, j):
        return {i: row[j] for i, row in self.matrix.rep.items() if j in row}

    def rows(self):
        entries = self.entries()
        return [
            [entries.get(i, {}).get(j, ZERO) for j in range(self.dom.dim)]
            for i in range(self.cod.dim)
        ]

    def to_json(self):
        return {
            'dom': self.dom.names,
            'cod': self.cod.names,
            'matrix': [[format_scalar(v) for v in row] for row in self.rows()],
        }

    @property
    def shape(self):
        return (self.cod.dim, self.dom.dim)

    @property
    def is_zero(self):
        return not self.entries()

    # ---------------------------------------------------------------- algebra

    def compose(self, other):
        """
        self ∘ other. The inner words must agree factor for factor.
        """
        if self.dom != other.cod:
            msg = _('Cannot compose: {left} expects {dom} but {right} lands in {cod}.')
            raise WordMismatch(msg.format(left=self, dom=self.dom, right=other, cod=other.cod))
        return Morphism(other.dom, self.cod, self.matrix.matmul(other.matrix))

    __matmul__ = compose

    def tensor(self, other):
        """
        Kronecker product, leftmost factor most significant.
        """
        rows = {}
        m2, n2 = other.shape
        right = other.entries()
        for i1, row1 in self.entries().items():
            for i2, row2 in right.items():
                row = rows.setdefault(i1 * m2 + i2, {})
                for j1, a in row1.items():
                    for j2, b in row2.items():
                        row[j1 * n2 + j2] = a * b
        shape = (self.cod.dim * m2, self.dom.dim * n2)
        return Morphism(self.dom + other.dom, self.cod + other.cod, _sparse(rows, shape))

    def _check_parallel(self, other):
        if self.dom != other.dom or self.cod != other.cod:
            msg = _('Morphisms {left} and {right} are not parallel.')
            raise WordMismatch(msg.format(left=self, right=other))

    def __add__(self, other):
        self._check_parallel(other)
        return Morphism(self.dom, self.cod, self.matrix + other.matrix)

    def __sub__(self, other):
        self._check_parallel(other)
        return Morphism(self.dom, self.cod, self.matrix - other.matrix)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, scalar):
        scalar = to_scalar(scalar)
        if scalar == ZERO:
            return Morphism.zero(self.dom, self.cod)
        return Morphism(self.dom, self.cod, self.matrix * scalar)

    def transpose(self):
        return Morphism(self.cod, self.dom, self.matrix.transpose())

    def retype(self, dom=None, cod=None):
        """
        Same matrix read between different words of the same dimensions.
        """
        return Morphism(dom if dom is not None else self.dom,
                        cod if cod is not None else self.cod, self.matrix)

    # ---------------------------------------------------------------- linear algebra

    def rank(self):
        if 0 in self.shape:
            return 0
        return self.matrix.rank()

    def inverse(self):
        """
        The exact inverse, or None when the matrix is not square of full rank.
        """
        if self.cod.dim != self.dom.dim:
            return None
        if self.dom.dim == 0:
            return Morphism.identity(self.dom).retype(self.cod, self.dom)
        try:
            inv = self.matrix.to_field().inv()
        except DMNonInvertibleMatrixError:
            return None
        return Morphism(self.cod, self.dom, inv)

    def is_invertible(self):
        return self.inverse() is not None

    def kernel(self):
        """
        An injection K -> dom whose columns are the canonical null space basis: for each
        free column f of the reduced row echelon form, x[f] = 1 and x[pivot] = -R[pivot row][f].
        """
        n = self.dom.dim
        if self.cod.dim == 0 or self.is_zero:
            pivots, reduced = (), {}
        else:
            rref, pivots = self.matrix.rref()
            reduced = rref.to_sparse().rep
        free = [f for f in range(n) if f not in set(pivots)]

        space = TensorWord.of(GenSpace.anonymous(len(free), 'ker'))
        rows = {}
        for k, f in enumerate(free):
            rows.setdefault(f, {})[k] = ONE
            for r, p in enumerate(pivots):
                value = reduced.get(r, {}).get(f, ZERO)
                if value != ZERO:
                    rows.setdefault(p, {})[k] = -value

        logger.debug('kernel of %s -> %s has dimension %d', self.dom, self.cod, len(free))
        return Morphism(space, self.dom, _sparse(rows, (n, len(free))))

    def left_inverse(self):
        """
        For an injective morphism E, the map (EᵀE)⁻¹Eᵀ reading coordinates in its image.
        """
        if self.dom.dim == 0:
            return Morphism.zero(self.cod, self.dom)
        gram = self.transpose().compose(self)
        inv = gram.inverse()
        if inv is None:
            msg = _('{morphism} is not injective; it has no left inverse.')
            raise ShapeError(msg.format(morphism=self))
        return inv.compose(self.transpose())

    # ---------------------------------------------------------------- comparison

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self.dom == other.dom and self.cod == other.cod
            and self.entries() == other.entries()
        )

    def same_matrix(self, other):
        """
        Entry-wise equality ignoring the words.
        """
        return self.shape == other.shape and self.entries() == other.entries()

    def __hash__(self):
        return hash((self.dom, self.cod))

    def __repr__(self):
        return 'Morphism({0} -> {1})'.format(self.dom, self.cod)
