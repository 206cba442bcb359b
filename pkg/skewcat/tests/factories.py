# vim: ts=4:sw=4:expandtabs

import os
import random

import factory
from faker import Faker

import skewcat
from skewcat.fusion.corpus import BUILDERS as BIMONOID_BUILDERS, bimonoid
from skewcat.span.corpus import random_category
from skewcat.tensor import GenSpace, Morphism, TensorWord

FIXTURE_DIR = os.path.join(os.path.dirname(skewcat.__file__), 'fixtures')

fake = Faker()


def fixture_path(name):
    return os.path.join(FIXTURE_DIR, name)


class GenSpaceFactory(factory.Factory):
    class Meta:
        model = GenSpace

    name = factory.Sequence(lambda n: 'V{0}'.format(n))
    dim = factory.Faker('random_int', min=1, max=3)


class TensorWordFactory(factory.Factory):
    class Meta:
        model = TensorWord.of

    factors = factory.List([factory.SubFactory(GenSpaceFactory)])

    @classmethod
    def _create(cls, model_class, factors):
        return model_class(*factors)

    _build = _create


def _random_rows(height, width, low=-3, high=3):
    return [[fake.random_int(min=low, max=high) for _j in range(width)] for _i in range(height)]


class MorphismFactory(factory.Factory):
    """
    A random integer matrix between two fresh single-space words.
    """
    class Meta:
        model = Morphism.from_rows

    dom = factory.SubFactory(TensorWordFactory)
    cod = factory.SubFactory(TensorWordFactory)
    rows = factory.LazyAttribute(lambda o: _random_rows(o.cod.dim, o.dom.dim))


class BimonoidFactory(factory.Factory):
    """
    One of the validated corpus bimonoids.
    """
    class Meta:
        model = bimonoid

    name = factory.Faker('random_element', elements=sorted(BIMONOID_BUILDERS))


class RandomCategoryFactory(factory.Factory):
    class Meta:
        model = random_category

    rng = factory.LazyFunction(lambda: random.Random(fake.random_int(min=0, max=2 ** 31)))


class CheckRequestDataFactory(factory.DictFactory):
    """
    Form data for one skewcat run.
    """
    command = 'validate'
    kind = 'bimonoid'
    path = factory.LazyFunction(lambda: fixture_path('kZ2.json'))
    output_format = 'json'
    seed = factory.Faker('random_int', min=0, max=1000)
    count = 1
