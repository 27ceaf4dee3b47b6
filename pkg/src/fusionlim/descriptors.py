"""Reading group, setup and module descriptor files.

A descriptor is a plain text file with one item per line:

    degree 6
    gen (1 2 3 4 5)
    gen (4 5 6)
    prime 2
    Y (1 2)(3 4), (1 3)(2 4)
    orders 2 2
    mat 1 0 0 1
    mat 0 1 1 0

Only ``degree`` and ``gen`` are required.  ``Y`` makes the file a setup
descriptor; ``orders`` and ``mat`` lines (one matrix per generator) make it
a module descriptor.  Anything after ``#`` is a comment.  Bundled examples
are found by name (``a6``, ``s4.grp``, ...) in the package data directory.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources

from .errors import ValidationError
from .fusion import make_setup
from .modaction import parse_module_lines
from .permgroup import Group, Permutation, group_from_generators, is_prime, parse_generator_list

DATA_SUFFIXES = ("", ".grp", ".mod", ".setup")


@dataclass
class Descriptor:
    name: str
    group: Group
    prime: int | None = None
    Y: Group | None = None
    action: object = None
    subgroups: dict = None

    def setup(self):
        if self.prime is None:
            raise ValidationError(f"{self.name}: no prime given")
        if self.Y is None:
            raise ValidationError(f"{self.name}: no Y line, not a setup descriptor")
        return make_setup(self.group, self.prime, self.Y)


def bundled_names():
    root = resources.files("fusionlim") / "data"
    return sorted(p.name for p in root.iterdir() if not p.name.startswith("."))


def resolve(path_or_name):
    """A readable path for a file name or a bundled example name."""
    if os.path.exists(path_or_name):
        return path_or_name
    root = resources.files("fusionlim") / "data"
    base = os.path.basename(path_or_name)
    for suffix in DATA_SUFFIXES:
        candidate = root / (base + suffix)
        if candidate.is_file():
            return str(candidate)
    raise ValidationError(f"no such group file or bundled example: {path_or_name!r}")


def parse_descriptor(text, name="<text>", cap=None):
    degree = None
    gens = []
    prime = None
    y_text = None
    module_lines = []
    extra = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "degree":
            try:
                degree = int(rest)
            except ValueError:
                raise ValidationError(f"{name}:{lineno}: bad degree {rest!r}") from None
            if degree < 1:
                raise ValidationError(f"{name}:{lineno}: degree must be positive")
        elif word == "gen":
            if degree is None:
                raise ValidationError(f"{name}:{lineno}: gen before degree")
            gens.append(Permutation.parse(rest, degree))
        elif word == "prime":
            try:
                prime = int(rest)
            except ValueError:
                raise ValidationError(f"{name}:{lineno}: bad prime {rest!r}") from None
            if not is_prime(prime):
                raise ValidationError(f"{name}:{lineno}: {prime} is not prime")
            module_lines.append(line)
        elif word == "Y":
            y_text = rest
        elif word == "subgroup":
            label, _, gen_text = rest.partition(" ")
            extra[label] = gen_text
        elif word in ("orders", "mat"):
            module_lines.append(line)
        else:
            raise ValidationError(f"{name}:{lineno}: unknown keyword {word!r}")
    if degree is None:
        raise ValidationError(f"{name}: missing degree line")
    kwargs = {} if cap is None else {"cap": cap}
    G = group_from_generators(degree, gens, **kwargs)
    Y = None
    if y_text is not None:
        Y = group_from_generators(degree, parse_generator_list(y_text, degree))
        if not Y <= G:
            raise ValidationError(f"{name}: Y is not a subgroup of the group")
    action = None
    if any(line.startswith(("orders", "mat")) for line in module_lines):
        if not gens:
            raise ValidationError(f"{name}: a module needs group generators")
        action = parse_module_lines(module_lines, G)
    subgroups = {label: group_from_generators(degree, parse_generator_list(t, degree))
                 for label, t in extra.items()}
    return Descriptor(name, G, prime, Y, action, subgroups)


def load(path_or_name, cap=None):
    path = resolve(path_or_name)
    with open(path) as fh:
        text = fh.read()
    return parse_descriptor(text, name=os.path.basename(path), cap=cap)


def format_descriptor(G, prime=None, Y=None, action=None, comment=None):
    """The inverse of parse_descriptor (generators are written as given)."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"degree {G.degree}")
    for g in G.gens:
        lines.append(f"gen {g}")
    if prime is not None:
        lines.append(f"prime {prime}")
    if Y is not None:
        lines.append("Y " + ", ".join(str(y) for y in Y.gens))
    if action is not None:
        lines.append("orders " + " ".join(str(o) for o in action.module.cyclic_orders))
        for g in G.gens:
            M = action.matrix(g)
            lines.append("mat " + " ".join(str(x) for row in M for x in row))
    return "\n".join(lines) + "\n"
