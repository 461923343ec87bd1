"""Pointed rational polyhedral cones in double description.

A Cone stores both its extreme rays and its facet normals, each primitive
and lex-sorted.  Construction from rays computes the facet normals by
Fourier-Motzkin elimination over exact integers and keeps only the
facet-defining inequalities.  Only full-dimensional pointed cones are
representable; their duals are then full-dimensional and pointed too, so
dualizing is just a role swap.  Ambient rank is capped at RANK_LIMIT.
"""

from dataclasses import dataclass

from .errors import (
    BoundExceeded,
    NotFullDimensional,
    NotNonnegative,
    NotPointed,
    RankLimitExceeded,
)
from .lattice import (
    M_SIDE,
    N_SIDE,
    LatticeVector,
    dot,
    matrix_rank,
    primitive_tuple,
)

RANK_LIMIT = 4
_FM_ROW_CAP = 50_000


def _other_side(side):
    return M_SIDE if side == N_SIDE else N_SIDE


def _fm_eliminate(rays, rank):
    """Project {x : x = sum(lam_i * ray_i), lam >= 0} onto the x variables.

    Variables are ordered (lam_1..lam_n, x_1..x_d).  Rows are integer
    coefficient vectors; equalities and inequalities (>= 0) are kept in
    separate lists.  Eliminating lam_i prefers a pivot equality (a plain
    substitution); only when no equality mentions lam_i does the quadratic
    inequality pairing happen.  Returns (inequalities, equalities) over x,
    primitive and deduplicated.
    """
    n, d = len(rays), rank
    width = n + d
    ineqs = []
    for i in range(n):
        row = [0] * width
        row[i] = 1
        ineqs.append(row)
    eqs = []
    for j in range(d):
        row = [rays[i][j] for i in range(n)] + [0] * d
        row[n + j] = -1
        eqs.append(row)

    def tidy(rows):
        seen = set()
        out = []
        for row in rows:
            if all(e == 0 for e in row):
                continue
            key = primitive_tuple(row)
            if key not in seen:
                seen.add(key)
                out.append(list(key))
        return out

    for v in range(n):
        pivot = next((row for row in eqs if row[v] != 0), None)
        if pivot is not None:
            eqs.remove(pivot)
            p = pivot[v]
            sign = 1 if p > 0 else -1

            def substitute(row):
                c = row[v]
                if c == 0:
                    return row
                # row*|p| - pivot*(c*sign) zeroes column v; the row multiplier
                # |p| is positive, so inequality direction is preserved
                return [a * abs(p) - b * c * sign for a, b in zip(row, pivot)]

            ineqs = tidy(substitute(r) for r in ineqs)
            eqs = tidy(substitute(r) for r in eqs)
        else:
            pos = [r for r in ineqs if r[v] > 0]
            neg = [r for r in ineqs if r[v] < 0]
            zero = [r for r in ineqs if r[v] == 0]
            combos = []
            for pr in pos:
                for nr in neg:
                    combos.append([a * pr[v] - b * nr[v] for a, b in zip(nr, pr)])
            ineqs = tidy(zero + combos)
            if len(ineqs) > _FM_ROW_CAP:
                raise BoundExceeded(
                    "Fourier-Motzkin exceeded %d rows" % _FM_ROW_CAP
                )
    out_ineqs = tidy([row[n:] for row in ineqs])
    out_eqs = tidy([row[n:] for row in eqs])
    return out_ineqs, out_eqs


@dataclass(frozen=True)
class Face:
    """A face of a cone, recorded by the facet normals that cut it out."""

    parent: "Cone"
    saturated_normals: tuple
    rays: tuple
    dim: int

    def __post_init__(self):
        cut = [r for r in self.parent.rays
               if all(dot(self.parent.facet_normals[k].entries, r.entries) == 0
                      for k in self.saturated_normals)]
        if tuple(cut) != self.rays:
            raise ValueError("face rays must be exactly the rays vanishing "
                             "on the saturated normals")


@dataclass(frozen=True)
class Cone:
    """Full-dimensional pointed cone with rays and facet normals."""

    side: str
    rank: int
    rays: tuple
    facet_normals: tuple

    @classmethod
    def from_rays(cls, rays, rank, side):
        """Build the double description from generating rays.

        Raises NotPointed when the cone contains a line, NotFullDimensional
        when the rays fail to span, RankLimitExceeded above RANK_LIMIT.
        Non-extreme generators are dropped; rays and normals come out
        primitive and lex-sorted.
        """
        if side not in (N_SIDE, M_SIDE):
            raise ValueError("side must be N or M")
        if rank < 1:
            raise ValueError("rank must be positive")
        if rank > RANK_LIMIT:
            raise RankLimitExceeded(
                "rank %d exceeds the supported limit %d" % (rank, RANK_LIMIT))
        cleaned = []
        for r in rays:
            entries = tuple(int(e) for e in (r.entries if isinstance(r, LatticeVector) else r))
            if len(entries) != rank:
                raise ValueError("ray length does not match rank")
            if all(e == 0 for e in entries):
                raise ValueError("zero vector is not a ray")
            cleaned.append(primitive_tuple(entries))
        if not cleaned:
            raise ValueError("a cone needs at least one ray")
        ray_tuples = sorted(set(cleaned))

        ineqs, eqs = _fm_eliminate(ray_tuples, rank)
        if matrix_rank(ineqs + eqs) < rank:
            raise NotPointed("cone generated by %s contains a line" % (ray_tuples,))
        if eqs:
            raise NotFullDimensional(
                "rays %s span a proper subspace" % (ray_tuples,))

        facet_normals = []
        for h in ineqs:
            assert all(dot(h, r) >= 0 for r in ray_tuples)
            on = [r for r in ray_tuples if dot(h, r) == 0]
            if matrix_rank(on) == rank - 1:
                facet_normals.append(tuple(h))
        facet_normals = sorted(set(facet_normals))

        extreme = []
        for r in ray_tuples:
            saturated = [h for h in facet_normals if dot(h, r) == 0]
            if matrix_rank(saturated) == rank - 1:
                extreme.append(r)

        other = _other_side(side)
        return cls(
            side=side,
            rank=rank,
            rays=tuple(LatticeVector(r, side) for r in extreme),
            facet_normals=tuple(LatticeVector(h, other) for h in facet_normals),
        )

    def dual(self):
        """Swap roles: the dual's rays are this cone's facet normals."""
        return Cone(
            side=_other_side(self.side),
            rank=self.rank,
            rays=self.facet_normals,
            facet_normals=self.rays,
        )

    def contains(self, v):
        """Membership test against the facet normals.  Untagged vectors
        are accepted; a vector tagged with the other side is not."""
        if not isinstance(v, LatticeVector):
            raise ValueError("contains expects a LatticeVector")
        if v.side is not None and v.side != self.side:
            raise ValueError("vector is tagged with the other side")
        if v.rank != self.rank:
            raise ValueError("rank mismatch")
        return all(dot(h.entries, v.entries) >= 0 for h in self.facet_normals)

    def contains_tuple(self, entries):
        return all(dot(h.entries, entries) >= 0 for h in self.facet_normals)

    def facets(self):
        """All codimension-one faces, one per facet normal."""
        out = []
        for k in range(len(self.facet_normals)):
            h = self.facet_normals[k]
            rays = tuple(r for r in self.rays if dot(h.entries, r.entries) == 0)
            dim = matrix_rank([r.entries for r in rays])
            assert dim == self.rank - 1, "facet normal is not facet-defining"
            out.append(Face(self, (k,), rays, dim))
        return out

    def zero_face(self, functional):
        """The face on which a nonnegative functional vanishes.

        The functional lives on the opposite side.  Raises NotNonnegative
        if it is negative on some ray.
        """
        if functional.side != _other_side(self.side):
            raise ValueError("functional must live on the dual side")
        if functional.rank != self.rank:
            raise ValueError("rank mismatch")
        values = [dot(functional.entries, r.entries) for r in self.rays]
        bad = [i for i, v in enumerate(values) if v < 0]
        if bad:
            raise NotNonnegative(
                "functional %s is negative on ray %s"
                % (functional.entries, self.rays[bad[0]].entries))
        face_rays = tuple(r for r, v in zip(self.rays, values) if v == 0)
        saturated = tuple(
            k for k, h in enumerate(self.facet_normals)
            if all(dot(h.entries, r.entries) == 0 for r in face_rays))
        dim = matrix_rank([r.entries for r in face_rays])
        return Face(self, saturated, face_rays, dim)

    def __repr__(self):
        return "Cone(%s, rank=%d, rays=%s)" % (
            self.side, self.rank, [r.entries for r in self.rays])
