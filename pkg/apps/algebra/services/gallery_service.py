import numpy as np

from apps.algebra.models import Algebra
from apps.core.exceptions import UnknownGallery


class GalleryService:
    """
    Built-in algebras, addressed on the command line as `gallery:<name>`.

    Bases:
        C1, C2, C3: pointwise algebra C^n on the minimal idempotents e1..en.
        dual: C[t]/(t^2) on {1, t}.
        split: C[t]/(t^2 - 1) on {1, t}.
        Z4: group algebra of Z/4 on the group elements g0..g3.
    """

    @staticmethod
    def pointwise(n: int, algebra_id: str | None = None, names: list[str] | None = None) -> Algebra:
        structure = np.zeros((n, n, n), dtype=complex)
        for i in range(n):
            structure[i, i, i] = 1
        return Algebra(
            algebra_id=algebra_id or f"C{n}",
            basis_names=tuple(names or [f"e{i + 1}" for i in range(n)]),
            structure=structure,
            unit=np.ones(n, dtype=complex),
        )

    @staticmethod
    def truncated(square: complex, algebra_id: str) -> Algebra:
        """C[t]/(t^2 - square) on the basis {1, t}."""

        structure = np.zeros((2, 2, 2), dtype=complex)
        structure[0, 0, 0] = 1
        structure[0, 1, 1] = structure[1, 0, 1] = 1
        structure[1, 1, 0] = square
        return Algebra(algebra_id, ("1", "t"), structure, np.array([1, 0], dtype=complex))

    @staticmethod
    def cyclic_group(n: int, algebra_id: str | None = None) -> Algebra:
        structure = np.zeros((n, n, n), dtype=complex)
        for i in range(n):
            for j in range(n):
                structure[i, j, (i + j) % n] = 1
        unit = np.zeros(n, dtype=complex)
        unit[0] = 1
        return Algebra(
            algebra_id or f"Z{n}", tuple(f"g{i}" for i in range(n)), structure, unit
        )

    @classmethod
    def builders(cls) -> dict:
        return {
            "C1": lambda: cls.pointwise(1),
            "C2": lambda: cls.pointwise(2),
            "C3": lambda: cls.pointwise(3),
            "dual": lambda: cls.truncated(0, "dual"),
            "split": lambda: cls.truncated(1, "split"),
            "Z4": lambda: cls.cyclic_group(4),
        }

    @classmethod
    def names(cls) -> list[str]:
        return list(cls.builders())

    @classmethod
    def gallery(cls, name: str) -> Algebra:
        builders = cls.builders()
        if name not in builders:
            raise UnknownGallery(name, cls.names())
        return builders[name]()

    @classmethod
    def semisimple_names(cls) -> list[str]:
        return [name for name in cls.names() if name != "dual"]
