"""
Word pools the synthetic generator draws from. Names are ASCII apart from a few diacritics, which
exercise the ASCII folding of the normalizer.
"""

SURNAMES = (
    'Abel', 'Agmon', 'Ahlfors', 'Andrews', 'Arnold', 'Artin', 'Askey', 'Atiyah', 'Baker', 'Banach',
    'Bateman', 'Bergman', 'Bernstein', 'Bessel', 'Birkhoff', 'Bochner', 'Borel', 'Bott', 'Brauer',
    'Browder', 'Calderon', 'Cartan', 'Cauchy', 'Chebyshev', 'Chern', 'Courant', 'Darboux', 'Dedekind',
    'Deligne', 'Dirichlet', 'Dyson', 'Erdélyi', 'Erdős', 'Euler', 'Faltings', 'Fejer', 'Feller',
    'Fredholm', 'Frobenius', 'Gasper', 'Gauss', 'Gelfand', 'Grothendieck', 'Hadamard', 'Hardy',
    'Hecke', 'Hermite', 'Hilbert', 'Hodge', 'Hörmander', 'Ismail', 'Jacobi', 'Kato', 'Koekoek',
    'Kolmogorov', 'Koornwinder', 'Krein', 'Lax', 'Lebesgue', 'Legendre', 'Lerch', 'Lie', 'Littlewood',
    'Lozier', 'Lyapunov', 'Mahler', 'Markov', 'Mellin', 'Milnor', 'Minkowski', 'Mordell', 'Moser',
    'Müller', 'Nevanlinna', 'Noether', 'Olver', 'Ostrowski', 'Painlevé', 'Poincaré', 'Pólya',
    'Ramanujan', 'Rahman', 'Riemann', 'Riesz', 'Schur', 'Segal', 'Selberg', 'Serre', 'Siegel',
    'Sobolev', 'Stein', 'Stieltjes', 'Szegő', 'Tate', 'Temme', 'Titchmarsh', 'Tricomi', 'Turan',
    'Watson', 'Weil', 'Weyl', 'Whittaker', 'Wiener', 'Wimp', 'Zagier', 'Zygmund',
)

GIVEN_NAMES = (
    'Adam', 'Alice', 'Andrei', 'Anna', 'Boris', 'Carla', 'Claire', 'Daniel', 'David', 'Elena',
    'Emil', 'Erik', 'Eva', 'Felix', 'Frank', 'George', 'Hanna', 'Hans', 'Helena', 'Igor', 'Irene',
    'Jakob', 'Jan', 'Julia', 'Karl', 'Klara', 'Laura', 'Leon', 'Lucia', 'Marco', 'Maria', 'Marta',
    'Nadia', 'Nikolai', 'Olga', 'Oskar', 'Paul', 'Peter', 'Rosa', 'Sofia', 'Stefan', 'Tomas',
    'Vera', 'Viktor', 'Walter', 'Yuri',
)

TITLE_WORDS = (
    'abelian', 'algebraic', 'analytic', 'approximation', 'asymptotic', 'automorphic', 'banach',
    'basic', 'bessel', 'bifurcation', 'bilinear', 'boundary', 'bounds', 'canonical', 'cardinal',
    'characteristic', 'chebyshev', 'cohomology', 'commutative', 'compact', 'complex', 'conformal',
    'confluent', 'conjecture', 'continued', 'convergence', 'convex', 'convolution', 'coulomb',
    'curvature', 'cyclotomic', 'decomposition', 'determinant', 'difference', 'differential',
    'diophantine', 'discrete', 'dispersion', 'distribution', 'eigenvalues', 'elliptic', 'ergodic',
    'error', 'estimates', 'expansions', 'exponential', 'extremal', 'factorization', 'fourier',
    'fractional', 'functional', 'gamma', 'gaussian', 'generating', 'geodesic', 'gradient', 'group',
    'harmonic', 'hermite', 'hypergeometric', 'identities', 'inequalities', 'integral', 'interpolation',
    'invariant', 'inverse', 'iterative', 'jacobi', 'kernel', 'lattice', 'legendre', 'lemniscate',
    'linear', 'manifold', 'mapping', 'matrix', 'measure', 'modular', 'moment', 'monotonic',
    'multiplicative', 'nonlinear', 'norm', 'numerical', 'operator', 'orthogonal', 'oscillation',
    'partition', 'periodic', 'perturbation', 'polylogarithm', 'polynomials', 'positivity', 'prime',
    'probabilistic', 'quadrature', 'quadratic', 'quantum', 'ramification', 'random', 'rational',
    'recurrence', 'reflection', 'regularity', 'representation', 'residue', 'riemann', 'ring',
    'scattering', 'semigroup', 'series', 'singular', 'solitons', 'spectral', 'spherical', 'spline',
    'stability', 'stirling', 'stochastic', 'summation', 'symmetric', 'symplectic', 'tauberian',
    'tensor', 'theta', 'toeplitz', 'topological', 'transform', 'trigonometric', 'turning', 'uniform',
    'variational', 'wavelet', 'weighted', 'whittaker', 'zeros', 'zeta',
)

SERIALS = (
    'Acta Arith.', 'Acta Math.', 'Adv. Math.', 'Ann. Math.', 'Ann. Phys.', 'Appl. Math. Comput.',
    'Bull. Lond. Math. Soc.', 'Comment. Math. Helv.', 'Commun. Math. Phys.', 'Constr. Approx.',
    'Duke Math. J.', 'Integral Transforms Spec. Funct.', 'Invent. Math.', 'J. Approx. Theory',
    'J. Comput. Appl. Math.', 'J. Math. Anal. Appl.', 'J. Number Theory', 'J. Reine Angew. Math.',
    'Math. Ann.', 'Math. Comput.', 'Math. Z.', 'Numer. Math.', 'Proc. Am. Math. Soc.',
    'Ramanujan J.', 'SIAM J. Math. Anal.', 'SIAM J. Numer. Anal.', 'Stud. Appl. Math.',
    'Trans. Am. Math. Soc.',
)

MSC_TOP_LEVEL_WEIGHTS = {
    '05': 4, '11': 8, '14': 4, '20': 3, '26': 4, '30': 6, '33': 8, '34': 6, '35': 8, '41': 5, '42': 4,
    '46': 4, '47': 4, '53': 3, '60': 5, '65': 8, '68': 3, '81': 3,
}

# Cited references of a special-functions library cluster around 33, then 65 and 11
LINK_MSC_WEIGHTS = {'33': 45, '65': 20, '11': 12, '34': 7, '30': 6, '41': 5, '42': 3, '26': 2}

MSC_SUBCLASS_LETTERS = 'ABCDEFGHJKLMNPQRS'
