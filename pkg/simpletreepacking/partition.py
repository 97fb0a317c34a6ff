#!/usr/bin/env python
# -*- coding: utf-8 -*-


'''
Partitions of the vertex set {0, ..., n-1}.

A Partition is always stored in canonical form: every class sorted,
classes ordered by their smallest vertex.  Two partitions of the same
family are therefore equal as plain values no matter how they were
built, which is what the sequence comparisons rely on.

P refines Q (P <= Q) when every class of P sits inside a class of Q.
Singletons refine everything, and everything refines the trivial
partition {V}.
'''


try:
    ModuleNotFoundError
except:
    ModuleNotFoundError = ImportError

try:
    from .miscfuncs import isitint, InvalidPartition
except Exception as e:
    if type(e) != ImportError and \
       type(e) != ModuleNotFoundError and \
       type(e) != ValueError and \
       type(e) != SystemError:
        raise Exception("Unknown problem with imports.")
    from miscfuncs import isitint, InvalidPartition


class Partition(object):
    '''
    Immutable canonical partition.

    classes is a tuple of sorted vertex tuples, ordered by minimum
    vertex; classof[v] is the index of the class holding v.

    >>> p = Partition([[2, 0], [1]])
    >>> p.classes
    ((0, 2), (1,))
    >>> p.classof
    (0, 1, 0)
    >>> p == Partition([[1], [0, 2]])
    True
    '''

    def __init__(self, classes, n=None):
        family = []
        for c in classes:
            c = sorted(set(c))
            if not c:
                raise InvalidPartition('Partition classes must be nonempty.')
            family.append(c)
        total = sum(len(c) for c in family)
        if n is None:
            n = total
        if not isitint(n) or n < 0:
            raise InvalidPartition('Ground set size must be a non-negative integer.')
        classof = [None] * n
        for c in family:
            for v in c:
                if not isitint(v) or v < 0 or v >= n:
                    raise InvalidPartition('Vertex %r out of range for %d vertices.' % (v, n))
                if classof[v] is not None:
                    raise InvalidPartition('Vertex %d appears in two classes.' % v)
                classof[v] = True
        if total != n:
            raise InvalidPartition('Classes do not cover all %d vertices.' % n)
        family.sort(key=lambda c: c[0])
        for i, c in enumerate(family):
            for v in c:
                classof[v] = i
        self.n = n
        self.classes = tuple(tuple(c) for c in family)
        self.classof = tuple(classof)

    @classmethod
    def fromlabels(cls, labels):
        '''
        Builds a partition from any labelling of the vertices; vertices
        with equal labels share a class.

        >>> Partition.fromlabels(['b', 'a', 'b']).tolist()
        [[0, 2], [1]]
        '''

        groups = {}
        order = []
        for v, label in enumerate(labels):
            if label not in groups:
                groups[label] = []
                order.append(label)
            groups[label].append(v)
        return cls([groups[label] for label in order], len(labels))

    @classmethod
    def trivial(cls, n):
        if n == 0:
            return cls([], 0)
        return cls([range(n)], n)

    @classmethod
    def singletons(cls, n):
        return cls([[v] for v in range(n)], n)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.classof == other.classof

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash(self.classof)

    def __repr__(self):
        return 'Partition(%r)' % (self.tolist(),)

    def tolist(self, base=0):
        return [[v + base for v in c] for c in self.classes]

    def classcontaining(self, v):
        return self.classof[v]

    def sameclass(self, u, v):
        return self.classof[u] == self.classof[v]

    def refines(self, other):
        return refines(self, other)

    def strictlyrefines(self, other):
        return strictly_refines(self, other)


def _checkground(p, q):
    if p.n != q.n:
        raise InvalidPartition('Cannot compare partitions of %d and %d vertices.' % (p.n, q.n))


def refines(p, q):
    '''
    True iff every class of p is a subset of a class of q.

    >>> refines(Partition.singletons(3), Partition([[0, 2], [1]]))
    True
    >>> refines(Partition([[0, 1], [2]]), Partition([[0], [1, 2]]))
    False
    '''

    _checkground(p, q)
    image = {}
    for v in range(p.n):
        if image.setdefault(p.classof[v], q.classof[v]) != q.classof[v]:
            return False
    return True


def strictly_refines(p, q):
    return refines(p, q) and p != q


def class_containing(p, v):
    if not isitint(v) or v < 0 or v >= p.n:
        raise InvalidPartition('Vertex %r out of range for %d vertices.' % (v, p.n))
    return p.classof[v]
