"""Reference-element data: Lagrange lattices, shape functions, derivatives.

Lagrange elements of order k in {1, 2, 3} on the reference triangle with
vertices (0,0), (1,0), (0,1).  Node layout: the three vertices first, then
k-1 interior nodes per edge (edges in the order given by LOCAL_EDGES, nodes
ordered along the local edge direction), then interior nodes.

The same machinery provides the polynomial geometry maps of curved
(isoparametric) elements.
"""

import numpy as np

# local edge e is opposite vertex e; tuple gives the local direction
LOCAL_EDGES = ((1, 2), (2, 0), (0, 1))

_VERTICES = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])


def monomial_exponents(k):
    """Exponent pairs (a, b) of the P_k monomial basis, graded order."""
    return [(a, d - a) for d in range(k + 1) for a in range(d, -1, -1)]


def lattice_nodes(k):
    """Reference nodes of the order-k Lagrange element.

    Returns (nodes, vertex_slots, edge_slots, interior_slots) where
    edge_slots[e] lists node indices along local edge e in local direction.
    """
    if k < 1:
        raise ValueError("order must be >= 1")
    nodes = [_VERTICES[0], _VERTICES[1], _VERTICES[2]]
    edge_slots = []
    for a, b in LOCAL_EDGES:
        slots = []
        for j in range(1, k):
            t = j / k
            slots.append(len(nodes))
            nodes.append((1 - t) * _VERTICES[a] + t * _VERTICES[b])
        edge_slots.append(slots)
    interior_slots = []
    for i in range(1, k):
        for j in range(1, k - i):
            interior_slots.append(len(nodes))
            nodes.append(np.array([i / k, j / k]))
    nodes = np.array(nodes)
    n_expected = (k + 1) * (k + 2) // 2
    assert nodes.shape[0] == n_expected
    return nodes, [0, 1, 2], edge_slots, interior_slots


def _monomial_tables(k, pts):
    """Values and first/second derivatives of the P_k monomials at pts."""
    pts = np.asarray(pts, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    expo = monomial_exponents(k)
    n, nm = pts.shape[0], len(expo)
    val = np.zeros((n, nm))
    dval = np.zeros((n, nm, 2))
    d2val = np.zeros((n, nm, 2, 2))

    def pw(z, p):
        return z ** p if p >= 0 else np.zeros_like(z)

    for j, (a, b) in enumerate(expo):
        val[:, j] = pw(x, a) * pw(y, b)
        dval[:, j, 0] = a * pw(x, a - 1) * pw(y, b)
        dval[:, j, 1] = b * pw(x, a) * pw(y, b - 1)
        d2val[:, j, 0, 0] = a * (a - 1) * pw(x, a - 2) * pw(y, b)
        d2val[:, j, 1, 1] = b * (b - 1) * pw(x, a) * pw(y, b - 2)
        dxy = a * b * pw(x, a - 1) * pw(y, b - 1)
        d2val[:, j, 0, 1] = dxy
        d2val[:, j, 1, 0] = dxy
    return val, dval, d2val


class LagrangeRef:
    """Order-k Lagrange basis on the reference triangle."""

    def __init__(self, k):
        self.k = k
        self.nodes, self.vertex_slots, self.edge_slots, self.interior_slots = \
            lattice_nodes(k)
        self.ndof = self.nodes.shape[0]
        vander, _, _ = _monomial_tables(k, self.nodes)
        # column i of coeff expresses basis function i in monomials
        self.coeff = np.linalg.solve(vander, np.eye(self.ndof))

    def tabulate(self, pts):
        """Return (phi, dphi, d2phi) at reference points.

        Shapes: (npts, ndof), (npts, ndof, 2), (npts, ndof, 2, 2).
        """
        val, dval, d2val = _monomial_tables(self.k, pts)
        phi = val @ self.coeff
        dphi = np.einsum("pma,mn->pna", dval, self.coeff)
        d2phi = np.einsum("pmab,mn->pnab", d2val, self.coeff)
        return phi, dphi, d2phi


_REF_CACHE = {}


def lagrange_ref(k):
    if k not in _REF_CACHE:
        _REF_CACHE[k] = LagrangeRef(k)
    return _REF_CACHE[k]


def edge_points(edge, params):
    """Reference coordinates on a local edge at parameters in [0, 1]."""
    a, b = LOCAL_EDGES[edge]
    params = np.asarray(params, dtype=float)[:, None]
    return (1 - params) * _VERTICES[a] + params * _VERTICES[b]
