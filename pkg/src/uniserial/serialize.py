"""JSON forms of sites, points, objects, Hom spaces and almost split sequences."""

from __future__ import annotations

import json

from .errors import InvalidLabel, UniserialError
from .site import CoverPoint, Site
from .tube import ArData, HomSpace, IntervalObject, make_object


class ValidationError(UniserialError):
    """Malformed JSON input."""


def _load(text_or_obj):
    if isinstance(text_or_obj, (str, bytes)):
        try:
            return json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON: {exc}") from None
    return text_or_obj


def site_to_json(site: Site) -> dict:
    out = {"kind": site.kind, "base": site.base}
    if site.base == "cyclic":
        out["rank"] = site.rank
    if site.base == "finite":
        out["size"] = site.size
    return out


def site_from_json(data) -> Site:
    d = _load(data)
    if not isinstance(d, dict):
        raise ValidationError("site descriptor must be a JSON object")
    unknown = set(d) - {"kind", "base", "rank", "size"}
    if unknown:
        raise ValidationError(f"unknown site fields {sorted(unknown)}")
    try:
        return Site(d.get("kind"), d.get("base"), rank=d.get("rank"), size=d.get("size"))
    except (TypeError, ValueError) as exc:
        raise ValidationError(str(exc)) from None


def vertex_to_json(v):
    return list(v) if isinstance(v, tuple) else v


def vertex_from_json(site: Site, v):
    if isinstance(v, list):
        v = tuple(v)
    try:
        return site.check_vertex(v)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def point_to_json(p: CoverPoint) -> dict:
    return {"deck": p.deck, "vertex": vertex_to_json(p.vertex)}


def point_from_json(site: Site, d) -> CoverPoint:
    if not isinstance(d, dict) or set(d) != {"deck", "vertex"}:
        raise ValidationError(f"cover point must have exactly 'deck' and 'vertex': {d!r}")
    if isinstance(d["deck"], bool) or not isinstance(d["deck"], int):
        raise ValidationError("deck must be an integer")
    try:
        return site.point(d["deck"], vertex_from_json(site, d["vertex"]))
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def object_to_json(x: IntervalObject) -> dict:
    s, t, n = x.label
    return {"socle": vertex_to_json(s), "top": vertex_to_json(t), "winding": n,
            "a": point_to_json(x.a), "b": point_to_json(x.b)}


def object_from_json(site: Site, data) -> IntervalObject:
    """Accept the label form, the cover form, or both (which must agree)."""
    d = _load(data)
    if not isinstance(d, dict):
        raise ValidationError("object must be a JSON object")
    has_label = "socle" in d or "top" in d
    has_cover = "a" in d or "b" in d
    if not (has_label or has_cover):
        raise ValidationError("object needs socle/top/winding or a/b")
    try:
        from_label = from_cover = None
        if has_label:
            w = d.get("winding", 0)
            if isinstance(w, bool) or not isinstance(w, int):
                raise ValidationError("winding must be an integer")
            from_label = make_object(site, vertex_from_json(site, d.get("socle")),
                                     vertex_from_json(site, d.get("top")), w)
        if has_cover:
            from_cover = IntervalObject.from_cover(site, point_from_json(site, d.get("a")),
                                                   point_from_json(site, d.get("b")))
    except InvalidLabel as exc:
        raise ValidationError(str(exc)) from None
    if from_label is not None and from_cover is not None and from_label != from_cover:
        raise ValidationError("label and cover forms describe different objects")
    return from_label if from_label is not None else from_cover


def hom_to_json(h: HomSpace) -> dict:
    return {"dim": h.dim, "basis": list(h.basis)}


def ar_to_json(ar: ArData) -> dict:
    return {"start": object_to_json(ar.start), "middle": [object_to_json(m) for m in ar.middle],
            "end": object_to_json(ar.end)}
