from pathlib import Path

from nearness import BinaryOpTable, FeatureSystem, StructureCandidate
from nearness.document import load_document, load_example

DATA = Path(__file__).parent / "data"


def example():
    return load_example()


def fixture_doc(name):
    return load_document(str(DATA / name))


def table_structure(objects, add_rows, mul_rows, features, carrier, r=1, name="R"):
    """StructureCandidate from integer-indexed row matrices over ``objects``."""
    space = FeatureSystem(objects, features, r)
    add = BinaryOpTable.from_matrix("+", objects, [[objects[v] for v in row] for row in add_rows])
    mul = BinaryOpTable.from_matrix("·", objects, [[objects[v] for v in row] for row in mul_rows])
    return StructureCandidate(space, frozenset(carrier), add, mul, name)


def cyclic(n, features=None, carrier=None):
    objects = list(range(n))
    add = [[(a + b) % n for b in objects] for a in objects]
    mul = [[(a * b) % n for b in objects] for a in objects]
    features = features or {"id": {x: x for x in objects}}
    return table_structure(objects, add, mul, features, carrier or objects, name=f"Z{n}")


def as_dicts(R):
    """Plain ``{(x, y): z}`` tables over the whole universe for the oracle."""
    objs = R.space.objects
    add = {(x, y): R.add(x, y) for x in objs for y in objs}
    mul = {(x, y): R.mul(x, y) for x in objs for y in objs} if R.mul is not None else None
    return add, mul
