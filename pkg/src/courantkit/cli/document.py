"""Parsed documents and their canonical printed form."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..cocycle import BoxCover, LocalData1, LocalData2
from ..courant import GeneralizedSection
from ..exterior import Chart, DifferentialForm, VectorField


@dataclass(frozen=True)
class Command:
    words: tuple[str, ...]
    line: int = 0

    @property
    def text(self) -> str:
        return " ".join(self.words)

    def __eq__(self, other):
        return isinstance(other, Command) and self.words == other.words

    def __hash__(self):
        return hash(self.words)


@dataclass
class CoverSpec:
    """A box cover together with its local data, trivialized form and mode."""

    cover: BoxCover
    data: LocalData1 | LocalData2
    omega: DifferentialForm | None = None
    mode: str | None = None


@dataclass
class Document:
    chart: Chart
    objects: dict = field(default_factory=dict)
    points: dict = field(default_factory=dict)
    covers: dict = field(default_factory=dict)
    structure: str | None = None
    commands: list[Command] = field(default_factory=list)

    def kind(self, name: str) -> str | None:
        if name in self.objects:
            return object_kind(self.objects[name])
        if name in self.points:
            return "point"
        if name in self.covers:
            return "cover"
        return None

    def __str__(self):
        return print_document(self)


def object_kind(value) -> str:
    if isinstance(value, GeneralizedSection):
        return "section"
    if isinstance(value, VectorField):
        return "field"
    if isinstance(value, DifferentialForm):
        return "function" if value.degree == 0 else "form"
    raise TypeError(f"unexpected object {value!r}")


# --- printing ---------------------------------------------------------------

def format_form(a: DifferentialForm) -> str:
    """Like str(a), but a zero k-form keeps its degree: 0*dx^dy."""
    if a.is_zero() and a.degree > 0:
        names = a.chart.coordinates[:a.degree]
        return "0*" + "^".join("d" + c for c in names)
    return str(a)


def format_field(v: VectorField) -> str:
    if v.is_zero():
        return "0*@" + v.chart.coordinates[0]
    return str(v)


def format_object(value) -> str:
    if isinstance(value, GeneralizedSection):
        return f"({format_field(value.v)}, {format_form(value.alpha)})"
    if isinstance(value, VectorField):
        return format_field(value)
    return format_form(value)


def format_point(p) -> str:
    return "(" + ", ".join(str(c) for c in p) + ")"


def _labels(key) -> str:
    key = key if isinstance(key, tuple) else (key,)
    return " ".join(str(k) for k in key)


def format_cover(name: str, spec: CoverSpec) -> list[str]:
    out = [f"cover {name} {{"]
    if spec.omega is not None:
        out.append(f"  omega = {format_form(spec.omega)}")
    if spec.mode is not None:
        out.append(f"  mode {spec.mode}")
    for label in spec.cover.labels:
        box = spec.cover.boxes[label]
        out.append(f"  box {label} = {format_point(box.lower)} .. {format_point(box.upper)}")
    data = spec.data
    if isinstance(data, LocalData1):
        groups = (("theta", data.theta), ("h", data.h))
    else:
        groups = (("B", data.B), ("A", data.A), ("h", data.h))
    for word, table in groups:
        for key in sorted(table, key=lambda k: k if isinstance(k, tuple) else (k,)):
            out.append(f"  {word} {_labels(key)} = {format_form(table[key])}")
    out.append("}")
    return out


def print_document(doc: Document) -> str:
    chart = doc.chart
    lines = [f"chart R{chart.dimension} ({', '.join(chart.coordinates)})"]
    for name, value in doc.objects.items():
        lines.append(f"{object_kind(value)} {name} = {format_object(value)}")
    for name, p in doc.points.items():
        lines.append(f"point {name} = {format_point(p)}")
    if doc.structure is not None:
        lines.append(f"structure {doc.structure}")
    for name, spec in doc.covers.items():
        lines.extend(format_cover(name, spec))
    for cmd in doc.commands:
        lines.append(cmd.text)
    return "\n".join(lines) + "\n"
