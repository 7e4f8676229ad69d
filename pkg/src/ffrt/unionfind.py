"""Disjoint-set forest with deterministic roots.

The root of a merged set is always the element inserted first, so class
representatives do not depend on union order details.
"""

from __future__ import annotations

from collections import defaultdict


class DisjointSet:
    def __init__(self):
        self.parent = {}
        self.order = {}

    def make_set(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.order[x] = len(self.order)

    def find(self, x):
        self.make_set(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return rx
        if self.order[ry] < self.order[rx]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return rx

    def groups(self) -> list[list]:
        out = defaultdict(list)
        for x in sorted(self.parent, key=self.order.__getitem__):
            out[self.find(x)].append(x)
        return [out[r] for r in sorted(out, key=self.order.__getitem__)]
