"""Loading instance files.

An instance is a JSON object::

    {"variables": ["x", "y"], "parameter": "t",
     "curve": {"gamma": ["t^2", "t^3"]},
     "functions": [{"name": "f", "numerator": "y", "denominator": "x"}],
     "seed": 0}

``denominator`` defaults to ``"1"`` and ``seed`` is optional.
"""

from dataclasses import dataclass
import json
import re

from .curve import ParametrizedCurve
from .errors import InstanceError, NameCollision
from .parser import parse_poly, parse_unipoly

__all__ = ["Instance", "FunctionSpec", "load_instance", "instance_from_dict"]

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class FunctionSpec:
    name: str
    numerator: object  # MultiPoly
    denominator: object


@dataclass(frozen=True)
class Instance:
    curve: ParametrizedCurve
    functions: tuple
    seed: int = None
    source: str = None

    def to_json(self):
        return {
            "variables": list(self.curve.variables),
            "parameter": self.curve.parameter,
            "curve": {"gamma": [str(g) for g in self.curve.gamma]},
            "functions": [
                {"name": f.name, "numerator": str(f.numerator), "denominator": str(f.denominator)}
                for f in self.functions
            ],
            **({"seed": self.seed} if self.seed is not None else {}),
        }


def _field(obj, key, kind, where):
    if key not in obj:
        raise InstanceError(f"{where}: missing {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise InstanceError(f"{where}: {key!r} has the wrong type")
    return value


def _check_name(name, where):
    if not isinstance(name, str) or not _NAME.match(name):
        raise InstanceError(f"{where}: invalid name {name!r}")
    return name


def instance_from_dict(obj, source=None):
    if not isinstance(obj, dict):
        raise InstanceError("instance must be a JSON object")
    variables = _field(obj, "variables", list, "instance")
    variables = tuple(_check_name(v, "variables") for v in variables)
    if not variables or len(set(variables)) != len(variables):
        raise InstanceError("variables must be a nonempty list of distinct names")
    param = _check_name(_field(obj, "parameter", str, "instance"), "parameter")
    if param in variables:
        raise NameCollision(f"parameter {param!r} is also a variable")
    gamma_src = _field(_field(obj, "curve", dict, "instance"), "gamma", list, "curve")
    if len(gamma_src) != len(variables):
        raise InstanceError(f"gamma has {len(gamma_src)} entries for {len(variables)} variables")
    gamma = []
    for g in gamma_src:
        if not isinstance(g, str):
            raise InstanceError("gamma entries must be strings")
        gamma.append(parse_unipoly(g, param))
    curve = ParametrizedCurve(variables, param, tuple(gamma))
    functions = []
    for i, f in enumerate(_field(obj, "functions", list, "instance")):
        where = f"functions[{i}]"
        if not isinstance(f, dict):
            raise InstanceError(f"{where}: must be an object")
        name = f.get("name", f"f{i + 1}")
        if not isinstance(name, str):
            raise InstanceError(f"{where}: name must be a string")
        num = _field(f, "numerator", str, where)
        den = f.get("denominator", "1")
        if not isinstance(den, str):
            raise InstanceError(f"{where}: 'denominator' must be a string")
        functions.append(FunctionSpec(name, parse_poly(num, variables), parse_poly(den, variables)))
    seed = obj.get("seed")
    if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)):
        raise InstanceError("seed must be an integer")
    return Instance(curve, tuple(functions), seed, source)


def load_instance(path):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return instance_from_dict(obj, str(path))
