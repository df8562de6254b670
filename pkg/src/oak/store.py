"""In-memory triple store with subject-, predicate- and object-major indexes.

Writes build a fresh index state and publish it with a single attribute
assignment, so any number of readers can run against a consistent snapshot
while one writer works. Readers grab the state once per operation and never
see a half-indexed triple. Writers serialize among themselves on a lock.
"""

from __future__ import annotations

import threading
from typing import Iterable, Iterator

from .terms import DEFAULT_PREFIXES, Iri, PrefixMap, Term, Triple, triple_key
from .turtle import parse_turtle, serialize_turtle


class _State:
    """One immutable index generation: the triple set plus three nested
    lookup maps (spo, pos, osp)."""

    __slots__ = ("triples", "spo", "pos", "osp")

    def __init__(self, triples, spo, pos, osp) -> None:
        self.triples = triples
        self.spo = spo
        self.pos = pos
        self.osp = osp

    @staticmethod
    def empty() -> "_State":
        return _State(frozenset(), {}, {}, {})


def _copy_index(index: dict) -> dict:
    return {a: {b: set(cs) for b, cs in inner.items()} for a, inner in index.items()}


def _index_add(index: dict, a, b, c) -> None:
    index.setdefault(a, {}).setdefault(b, set()).add(c)


class TripleStore:
    def __init__(self, prefixes: dict[str, str] | PrefixMap | None = None) -> None:
        if isinstance(prefixes, PrefixMap):
            self.prefixes = prefixes.copy()
        else:
            self.prefixes = PrefixMap(DEFAULT_PREFIXES if prefixes is None else prefixes)
        self._state = _State.empty()
        self._write_lock = threading.Lock()

    # -- writing ---------------------------------------------------------

    def insert(self, triple: Triple) -> None:
        self.insert_many([triple])

    def insert_many(self, triples: Iterable[Triple]) -> int:
        """Add triples (set semantics). Returns how many were new."""
        batch = list(triples)
        for t in batch:
            if not isinstance(t.subject, Iri) or not isinstance(t.predicate, Iri):
                raise ValueError(f"subject and predicate must be IRIs: {t!r}")
        with self._write_lock:
            state = self._state
            fresh = [t for t in batch if t not in state.triples]
            if not fresh:
                return 0
            spo = _copy_index(state.spo)
            pos = _copy_index(state.pos)
            osp = _copy_index(state.osp)
            added = set()
            for t in fresh:
                if t in added:
                    continue
                added.add(t)
                _index_add(spo, t.subject, t.predicate, t.object)
                _index_add(pos, t.predicate, t.object, t.subject)
                _index_add(osp, t.object, t.subject, t.predicate)
            self._state = _State(state.triples | added, spo, pos, osp)
            return len(added)

    # -- reading ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self._state.triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._state.triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._state.triples)

    def triples(self) -> frozenset[Triple]:
        return self._state.triples

    def match(
        self,
        subject: Iri | None = None,
        predicate: Iri | None = None,
        object: Term | None = None,
    ) -> list[Triple]:
        """All triples agreeing with the bound components, sorted by
        subject, predicate, object. None is a wildcard."""
        state = self._state
        s, p, o = subject, predicate, object
        out: list[Triple]
        if s is not None and p is not None and o is not None:
            t = Triple(s, p, o)
            out = [t] if t in state.triples else []
        elif s is not None and p is not None:
            out = [Triple(s, p, obj) for obj in state.spo.get(s, {}).get(p, ())]
        elif p is not None and o is not None:
            out = [Triple(subj, p, o) for subj in state.pos.get(p, {}).get(o, ())]
        elif s is not None and o is not None:
            out = [Triple(s, pred, o) for pred in state.osp.get(o, {}).get(s, ())]
        elif s is not None:
            out = [
                Triple(s, pred, obj)
                for pred, objs in state.spo.get(s, {}).items()
                for obj in objs
            ]
        elif p is not None:
            out = [
                Triple(subj, p, obj)
                for obj, subjs in state.pos.get(p, {}).items()
                for subj in subjs
            ]
        elif o is not None:
            out = [
                Triple(subj, pred, o)
                for subj, preds in state.osp.get(o, {}).items()
                for pred in preds
            ]
        else:
            out = list(state.triples)
        out.sort(key=triple_key)
        return out

    def subjects(self) -> list[Iri]:
        return sorted(self._state.spo, key=lambda i: i.value)

    # -- documents -------------------------------------------------------

    def to_turtle(self) -> str:
        return serialize_turtle(self._state.triples, self.prefixes)

    @classmethod
    def from_turtle(cls, text: str) -> "TripleStore":
        triples, prefixes = parse_turtle(text)
        store = cls(prefixes)
        store.insert_many(triples)
        return store

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_turtle())

    @classmethod
    def load(cls, path) -> "TripleStore":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_turtle(fh.read())
