"""scikit-learn style wrappers around the solvers.

Vertices play the role of samples: ``predict`` returns one label per
vertex. Hitting-set estimators label members 1 and the rest 0; packing
estimators label each vertex with the index of its packing element, or -1,
in the manner of clustering ``labels_``.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .exact import DEFAULT_NODE_LIMIT, exact_max_packing, exact_min_hitting
from .local_search import local_search_hitting, local_search_packing
from .validation import check_graph, check_positive_int, check_property


class _HittingMixin:
    def predict(self, G=None):
        check_is_fitted(self, "solution_")
        labels = np.zeros(self.n_vertices_, dtype=int)
        labels[list(self.solution_)] = 1
        return labels

    def fit_predict(self, G, y=None):
        return self.fit(G).predict()


class _PackingMixin:
    def predict(self, G=None):
        check_is_fitted(self, "packing_")
        return np.asarray(self.packing_.labels(self.n_vertices_), dtype=int)

    def fit_predict(self, G, y=None):
        return self.fit(G).predict()


class LocalSearchHittingSet(_HittingMixin, BaseEstimator):
    """c-local search for a small hitting set.

    Parameters
    ----------
    property : str or property object
        ``"K2"``, ``"K2,P3"``, ``"ball:1"`` or a ``FiniteFamily``/``RadiusBall``.
    c : int
        Largest swap ``|Y|`` considered.
    greedy_init : bool
        Start from a greedy hitting set instead of all vertices.
    time_budget : float or None
        Seconds before aborting with an uncertified solution.

    Attributes
    ----------
    solution_ : tuple of int
    trace_ : SearchTrace
    certified_ : bool
        True when no improving swap remains.
    """

    def __init__(self, property="K2", c=1, greedy_init=False, time_budget=None):
        self.property = property
        self.c = c
        self.greedy_init = greedy_init
        self.time_budget = time_budget

    def fit(self, G, y=None):
        G = check_graph(G)
        spec = check_property(self.property)
        c = check_positive_int("c", self.c)
        self.solution_, self.trace_ = local_search_hitting(
            G, spec, c, greedy_init=self.greedy_init, time_budget=self.time_budget)
        self.certified_ = self.trace_.certified
        self.n_vertices_ = G.n
        return self


class LocalSearchPacking(_PackingMixin, BaseEstimator):
    """c-local search for a large (induced) packing.

    Attributes
    ----------
    packing_ : Packing
    labels_ : ndarray of shape (n_vertices,)
    trace_ : SearchTrace
    certified_ : bool
    """

    def __init__(self, property="K2", c=1, induced=False, time_budget=None):
        self.property = property
        self.c = c
        self.induced = induced
        self.time_budget = time_budget

    def fit(self, G, y=None):
        G = check_graph(G)
        spec = check_property(self.property)
        c = check_positive_int("c", self.c)
        self.packing_, self.trace_ = local_search_packing(
            G, spec, c, bool(self.induced), time_budget=self.time_budget)
        self.certified_ = self.trace_.certified
        self.n_vertices_ = G.n
        self.labels_ = self.predict()
        return self


class ExactHittingSet(_HittingMixin, BaseEstimator):
    def __init__(self, property="K2", node_limit=DEFAULT_NODE_LIMIT):
        self.property = property
        self.node_limit = node_limit

    def fit(self, G, y=None):
        G = check_graph(G)
        result = exact_min_hitting(G, check_property(self.property), self.node_limit)
        self.solution_ = result.solution
        self.optimal_ = result.optimal
        self.nodes_ = result.nodes
        self.n_vertices_ = G.n
        return self


class ExactPacking(_PackingMixin, BaseEstimator):
    def __init__(self, property="K2", induced=False, node_limit=DEFAULT_NODE_LIMIT):
        self.property = property
        self.induced = induced
        self.node_limit = node_limit

    def fit(self, G, y=None):
        G = check_graph(G)
        result = exact_max_packing(G, check_property(self.property), bool(self.induced), self.node_limit)
        self.packing_ = result.solution
        self.optimal_ = result.optimal
        self.nodes_ = result.nodes
        self.n_vertices_ = G.n
        self.labels_ = self.predict()
        return self
