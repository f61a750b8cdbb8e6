from .configuration import Triangle, TriangularConfiguration


class VertexAllocator:
    """Hands out vertex ids that have never been used by this allocator's owner."""

    def __init__(self, start: int = 0):
        self._next = start

    @classmethod
    def above(cls, *configs: TriangularConfiguration) -> "VertexAllocator":
        top = max((c.max_vertex for c in configs), default=-1)
        return cls(top + 1)

    @property
    def next_id(self) -> int:
        return self._next

    def reserve(self, vertex: int) -> None:
        self._next = max(self._next, vertex + 1)

    def fresh(self, count: int = 1) -> list[int]:
        ids = list(range(self._next, self._next + count))
        self._next += count
        return ids

    def fresh_vertex(self) -> int:
        return self.fresh(1)[0]

    def fresh_triangle(self) -> Triangle:
        a, b, c = self.fresh(3)
        return a, b, c
