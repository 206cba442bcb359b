# vim: ts=4:sw=4:expandtabs

LEFT = 'left'
RIGHT = 'right'

OP = 'op'
REV = 'rev'


def opposite(chirality):
    return RIGHT if chirality == LEFT else LEFT


class SkewStructure(object):
    """
    Tensor, unit and constraints of a skew monoidal structure on one of the carriers.

    For chirality LEFT the constraints point
        α: (X∗Y)∗Z -> X∗(Y∗Z),   λ: J∗X -> X,   ρ: X -> X∗J
    and for RIGHT they point the other way. On the matrix sandbox `tensor` is a
    TensorProduct, `unit` a TensorWord and the constraints are callables returning the
    component Morphism at the given words. On the bicategory carriers `tensor` and `unit`
    are 1-cells and the constraints are 2-cells.
    """
    def __init__(self, carrier, tensor, unit, assoc, left_unit, right_unit, chirality=LEFT, name=''):
        self.carrier = carrier
        self.tensor = tensor
        self.unit = unit
        self.assoc = assoc
        self.left_unit = left_unit
        self.right_unit = right_unit
        self.chirality = chirality
        self.name = name

    def replace(self, **changes):
        fields = dict(
            carrier=self.carrier, tensor=self.tensor, unit=self.unit, assoc=self.assoc,
            left_unit=self.left_unit, right_unit=self.right_unit,
            chirality=self.chirality, name=self.name,
        )
        fields.update(changes)
        return SkewStructure(**fields)

    def check(self, objs=None):
        return self.carrier.check(self, objs)

    def classify(self, objs=None):
        return self.carrier.classify(self, objs)

    def dualize(self, mode):
        return self.carrier.dualize(self, mode)

    def inverse(self):
        """
        The same tensor and unit with every constraint inverted; the chirality flips. Only a
        Hopf, left and right normal structure has one.
        """
        return self.carrier.inverse(self)

    def __repr__(self):
        return '<SkewStructure {0} ({1}, {2})>'.format(self.name, self.chirality, self.carrier)
