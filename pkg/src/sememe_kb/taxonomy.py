"""Sememe inventory organized as a category-rooted forest.

Loaded once from records, validated, then immutable: every query is
read-only and safe for unrestricted concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping, Optional

from .errors import LoadError, UnknownSememe
from .kdml import SememeRef


class Category(Enum):
    """The seven top-level sememe types."""

    Thing = "Thing"
    Part = "Part"
    Attribute = "Attribute"
    Time = "Time"
    Space = "Space"
    AttributeValue = "AttributeValue"
    Event = "Event"

    @classmethod
    def parse(cls, name: str) -> "Category":
        try:
            return cls[name]
        except KeyError:
            raise ValueError(f"unknown category: {name!r}") from None

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Sememe:
    """Atomic semantic unit with a bilingual label and a taxonomy position."""

    id: int
    ref: SememeRef
    category: Category
    parent: Optional[int] = None

    @property
    def english(self) -> str:
        return self.ref.english

    @property
    def chinese(self) -> str:
        return self.ref.chinese


class Taxonomy:
    """Immutable indexed forest of sememes, one or more trees per category."""

    def __init__(self, sememes: Iterable[Sememe]):
        self._by_id: dict[int, Sememe] = {}
        self._by_ref: dict[SememeRef, Sememe] = {}
        self._by_en: dict[str, list[Sememe]] = {}
        self._by_zh: dict[str, list[Sememe]] = {}
        for s in sememes:
            self._by_id[s.id] = s
            self._by_ref[s.ref] = s
            self._by_en.setdefault(s.english, []).append(s)
            self._by_zh.setdefault(s.chinese, []).append(s)
        for index in (self._by_en, self._by_zh):
            for matches in index.values():
                matches.sort(key=lambda s: s.id)
        self._depth: dict[int, int] = {}
        for s in self._by_id.values():
            self._compute_depth(s.id)
        self._roots: dict[Category, list[Sememe]] = {c: [] for c in Category}
        for s in self._by_id.values():
            if s.parent is None:
                self._roots[s.category].append(s)
        for roots in self._roots.values():
            roots.sort(key=lambda s: s.id)

    def _compute_depth(self, sememe_id: int) -> int:
        depth = self._depth.get(sememe_id)
        if depth is None:
            parent = self._by_id[sememe_id].parent
            depth = 0 if parent is None else self._compute_depth(parent) + 1
            self._depth[sememe_id] = depth
        return depth

    def __len__(self) -> int:
        return len(self._by_id)

    def __iter__(self) -> Iterator[Sememe]:
        return iter(sorted(self._by_id.values(), key=lambda s: s.id))

    def __contains__(self, sememe_id: int) -> bool:
        return sememe_id in self._by_id

    def get(self, sememe_id: int) -> Sememe:
        try:
            return self._by_id[sememe_id]
        except KeyError:
            raise UnknownSememe(f"no sememe with id {sememe_id}") from None

    def find_ref(self, ref: SememeRef) -> Optional[Sememe]:
        return self._by_ref.get(ref)

    def roots(self, category: Category) -> list[Sememe]:
        return list(self._roots[category])

    def root_counts(self) -> dict[str, int]:
        return {c.name: len(self._roots[c]) for c in Category}

    def depth(self, sememe_id: int) -> int:
        self.get(sememe_id)
        return self._depth[sememe_id]

    def resolve(self, query: str) -> list[Sememe]:
        """Look up sememes by label.

        A query containing ``|`` is an exact bilingual-ref match (0 or 1
        result); otherwise every sememe whose English or Chinese label
        equals the query is returned, ascending by id.
        """
        if "|" in query:
            try:
                ref = SememeRef.parse(query)
            except ValueError:
                return []
            found = self._by_ref.get(ref)
            return [found] if found is not None else []
        matches = {s.id: s for s in self._by_en.get(query, ())}
        for s in self._by_zh.get(query, ()):
            matches.setdefault(s.id, s)
        return [matches[i] for i in sorted(matches)]

    def root_of(self, sememe_id: int) -> Sememe:
        node = self.get(sememe_id)
        while node.parent is not None:
            node = self._by_id[node.parent]
        return node

    def ancestors(self, sememe_id: int) -> list[Sememe]:
        """Parent chain from the given sememe to its root, nearest first."""
        node = self.get(sememe_id)
        chain = []
        while node.parent is not None:
            node = self._by_id[node.parent]
            chain.append(node)
        return chain

    def path_distance(self, a: int, b: int) -> Optional[int]:
        """Edges on the unique simple path between two sememes.

        Returns None when they lie in different trees of the forest
        (the disconnected case).
        """
        self.get(a)
        self.get(b)
        if a == b:
            return 0
        da, db = self._depth[a], self._depth[b]
        x, y = a, b
        lift = da - db
        for _ in range(lift):
            x = self._by_id[x].parent
        for _ in range(-lift):
            y = self._by_id[y].parent
        steps = 0
        while x != y:
            px, py = self._by_id[x].parent, self._by_id[y].parent
            if px is None or py is None:
                return None
            x, y = px, py
            steps += 1
        return abs(lift) + 2 * steps


def _record_error(kind: str, record: Mapping, detail: str) -> LoadError:
    label = record.get("id", "?")
    return LoadError(kind, f"sememe record {label}: {detail}")


def load_taxonomy(records: Iterable[Mapping]) -> Taxonomy:
    """Build and validate a Taxonomy from dataset records.

    Record shape (one JSON object per line in taxonomy.jsonl):
    ``{"id": 0, "en": "human", "zh": "人", "category": "Thing", "parent": null}``

    Raises LoadError naming the offending record on any violation:
    DuplicateId, DuplicateRef, DanglingParent, ParentCategoryMismatch,
    CycleDetected (plus BadRecord for malformed input).
    """
    sememes: dict[int, Sememe] = {}
    seen_refs: set[SememeRef] = set()
    for record in records:
        try:
            sememe_id = record["id"]
            if not isinstance(sememe_id, int) or sememe_id < 0:
                raise ValueError(f"id must be a non-negative integer, got {sememe_id!r}")
            ref = SememeRef(record["en"], record["zh"])
            category = Category.parse(record["category"])
            parent = record.get("parent")
            if parent is not None and not isinstance(parent, int):
                raise ValueError(f"parent must be an id or null, got {parent!r}")
        except (KeyError, TypeError, ValueError) as exc:
            raise _record_error("BadRecord", record, str(exc)) from None
        if sememe_id in sememes:
            raise _record_error("DuplicateId", record, f"id {sememe_id} already defined")
        if ref in seen_refs:
            raise _record_error("DuplicateRef", record, f"ref {ref} already defined")
        sememes[sememe_id] = Sememe(sememe_id, ref, category, parent)
        seen_refs.add(ref)

    for s in sememes.values():
        if s.parent is None:
            continue
        parent = sememes.get(s.parent)
        if parent is None:
            raise LoadError("DanglingParent",
                            f"sememe record {s.id}: parent {s.parent} does not exist")
        if parent.category is not s.category:
            raise LoadError(
                "ParentCategoryMismatch",
                f"sememe record {s.id}: category {s.category} differs from "
                f"parent {parent.id} category {parent.category}")

    # Walk parent chains; every node must reach a root without revisiting.
    state: dict[int, int] = {}  # 1 = on current path, 2 = known good
    for start in sememes:
        path = []
        node = start
        while node is not None and state.get(node) != 2:
            if state.get(node) == 1:
                raise LoadError("CycleDetected",
                                f"sememe record {node}: parent chain forms a cycle")
            state[node] = 1
            path.append(node)
            node = sememes[node].parent
        for visited in path:
            state[visited] = 2

    return Taxonomy(sememes.values())
