"""Human-facing renderings of sememe trees: indented text, Graphviz
dot, and a lossless nested-JSON form (the wire format the web explorer
consumes)."""

from __future__ import annotations

import json
from enum import Enum

from .kdml import Head, Literal, Placeholder, SememeRef, SememeTree


class RenderFormat(Enum):
    Ascii = "ascii"
    Dot = "dot"
    Json = "json"

    @classmethod
    def parse(cls, name: str) -> "RenderFormat":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown render format: {name!r}") from None


def node_label(head: Head) -> str:
    return str(head)


def render_ascii(tree: SememeTree, ascii_only: bool = False) -> str:
    """One node per line; children indented with connectors, edge labels
    in brackets.  Line count equals node count."""
    if ascii_only:
        mid, last, cont, blank = "|- ", "`- ", "|  ", "   "
    else:
        mid, last, cont, blank = "├─ ", "└─ ", "│  ", "   "

    lines = [node_label(tree.head)]

    def walk(node: SememeTree, prefix: str):
        count = len(node.children)
        for i, (role, child) in enumerate(node.children):
            is_last = i == count - 1
            connector = last if is_last else mid
            lines.append(f"{prefix}{connector}[{role}] {node_label(child.head)}")
            walk(child, prefix + (blank if is_last else cont))

    walk(tree, "")
    return "\n".join(lines)


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def render_dot(tree: SememeTree) -> str:
    """Directed-graph description; node ids are stable preorder indices."""
    lines = ["digraph sememe_tree {"]

    def walk(node: SememeTree, index: int) -> int:
        lines.append(f'  n{index} [label="{_dot_escape(node_label(node.head))}"];')
        next_index = index + 1
        for role, child in node.children:
            lines.append(f'  n{index} -> n{next_index} [label="{_dot_escape(role)}"];')
            next_index = walk(child, next_index)
        return next_index

    walk(tree, 0)
    lines.append("}")
    return "\n".join(lines)


def head_to_obj(head: Head) -> dict:
    if isinstance(head, SememeRef):
        return {"sememe": str(head)}
    if isinstance(head, Placeholder):
        return {"placeholder": head.symbol}
    return {"literal": head.text}


def head_from_obj(obj: dict) -> Head:
    if "sememe" in obj:
        return SememeRef.parse(obj["sememe"])
    if "placeholder" in obj:
        return Placeholder(obj["placeholder"])
    if "literal" in obj:
        return Literal(obj["literal"])
    raise ValueError(f"not a head object: {obj!r}")


def tree_to_obj(tree: SememeTree) -> dict:
    return {
        "head": head_to_obj(tree.head),
        "children": [{"role": role, "tree": tree_to_obj(child)}
                     for role, child in tree.children],
    }


def tree_from_obj(obj: dict) -> SememeTree:
    children = tuple((entry["role"], tree_from_obj(entry["tree"]))
                     for entry in obj["children"])
    return SememeTree(head_from_obj(obj["head"]), children)


def render_json(tree: SememeTree) -> str:
    return json.dumps(tree_to_obj(tree), ensure_ascii=False, separators=(",", ":"))


def tree_from_json(text: str) -> SememeTree:
    return tree_from_obj(json.loads(text))


def render_tree(tree: SememeTree, fmt: RenderFormat, ascii_only: bool = False) -> str:
    """Render in the requested format; deterministic for a given tree."""
    if fmt is RenderFormat.Ascii:
        return render_ascii(tree, ascii_only=ascii_only)
    if fmt is RenderFormat.Dot:
        return render_dot(tree)
    return render_json(tree)
