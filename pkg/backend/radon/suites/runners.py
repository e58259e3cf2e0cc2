"""Seeded verification suites behind the management commands.

Every suite splits its parameter grid into independent tasks.  A task is
a top-level function of (config, *params) returning report rows, so the
tasks can run in a process pool; rows are sorted when the report is
rendered and the result does not depend on scheduling.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product

import django
import numpy as np
from django.conf import settings
from django.test.utils import override_settings

from archimedean.complex_radon import (a_pq_direct, a_pq_eval,
                                       beta_pq_pair, m_radial_complex,
                                       mellin_alpha_pq, minv_apply_complex)
from archimedean.exceptions import PoleError
from archimedean.real_radon import (a_k_direct, a_k_eval, beta_pair,
                                    m_radial, mellin_alpha, minv_apply,
                                    radon_direct, radon_isotypic)
from archimedean.testfns import PowerFunction, SectoralHarmonic, random_bump
from geometry.polygons import random_extension, random_polygon
from geometry.support import BumpDescriptor, zero_component_check
from padic.chernov import (cavalieri_integral, chernov_invert,
                           kochubei_integral)
from padic.generators import (make_rng, random_cc_function, random_kernel,
                              random_point, random_schwartz_function,
                              random_test_function, random_transform)
from padic.identities import (a_star_sides, equivariance_sides,
                              fourier_reverse_sides, fourier_round_trip_sides,
                              fprime_r_sides, keybeta_sides, m_star_sides,
                              round_trip_sides)

from .reports import (ARCHIMEDEAN_HEADER, FAIL, MELLIN_HEADER,
                      PADIC_HEADER, POLE, SKIPPED, SUPPORT_HEADER, Report,
                      exact_text, float_text, polygon_text, status)
from .serializers import COMPLEX, MELLIN_TABLE, PADIC, REAL, SUPPORT

logger = logging.getLogger(__name__)

ZONAL_SAMPLES = np.linspace(-0.98, 0.98, 41)
ZONAL_ORDER = 32

ANNULUS_EXTENT = 1.0
POINT_EXTENT = 1.5


def real_s_grid(n):
    return (n - 0.5, n, n + 0.5, n + 1, n + 2.5)


def complex_s_grid(n):
    return (2 * n - 1.5, 2 * n, 2 * n + 2, 2 * n + 4.5)


def tolerance(cfg, name):
    if cfg.rtol is not None:
        return cfg.rtol
    return settings.RADON['TOLERANCES'][name]


def report_config(cfg):
    """The part of the config that determines the rows."""
    data = cfg.as_dict()
    for key in ('output', 'jobs'):
        data.pop(key)
    return data


def point_text(point):
    return '(' + ', '.join(exact_text(c) for c in point) + ')'


def _execute(task):
    function, cfg, params = task
    radon = dict(
        settings.RADON,
        PRECISION=cfg.precision,
        QUADRATURE_ORDER=cfg.order,
    )
    with override_settings(RADON=radon):
        return function(cfg, *params)


def run_tasks(function, cfg, grid):
    tasks = [(function, cfg, params) for params in grid]
    if cfg.jobs == 1 or len(tasks) < 2:
        results = map(_execute, tasks)
        return [row for rows in results for row in rows]
    with ProcessPoolExecutor(
        max_workers=cfg.jobs, initializer=django.setup
    ) as executor:
        results = executor.map(_execute, tasks)
        return [row for rows in results for row in rows]


def _log_failures(suite, rows):
    for row in rows:
        if row.get('status') == FAIL:
            logger.warning('Набор %s: не выполнено %s', suite, row)


def _exact_row(identity, q, n, case, point, left, right):
    return {
        'identity': identity,
        'q': q,
        'n': n,
        'case': case,
        'point': point,
        'left': exact_text(left),
        'right': exact_text(right),
        'status': status(left == right),
    }


def padic_case(cfg, q, n, case):
    """All exact p-adic identities for one seeded random function."""
    rng = make_rng([cfg.seed, q, n, case])
    low, high = cfg.shells
    window = {
        'max_cells': cfg.max_cells,
        'shells': cfg.shells,
        'max_relative': cfg.max_level,
    }
    rows = []

    def check(identity, point, sides):
        rows.append(_exact_row(identity, q, n, case, point, *sides))

    f = random_cc_function(rng, q, n, **window)
    centers = [cell.center for cell in f.cells]
    extra = [random_point(rng, q, n, shells=(low - 1, high + 1))
             for _ in range(cfg.points)]
    for x in centers + extra:
        sides = round_trip_sides(f, x)
        check('round_trip', point_text(x), sides)
        check('chernov_cc', point_text(x), (chernov_invert(f, x), sides[0]))

    for x in centers:
        check('fourier_round_trip', point_text(x),
              fourier_round_trip_sides(f, x))
    for xi in (centers[0], random_point(rng, q, n, shells=cfg.shells)):
        check('fourier_reverse', point_text(xi), fourier_reverse_sides(f, xi))

    g = random_schwartz_function(rng, q, n, **window)
    points = [cell.center for cell in g.cells if any(cell.center)]
    points += [random_point(rng, q, n, shells=cfg.shells)
               for _ in range(cfg.points)]
    for x in points:
        check('chernov', point_text(x), (chernov_invert(g, x), g(x)))

    xi, eta = random_point(rng, q, n), random_point(rng, q, n)
    check('cavalieri', point_text(xi),
          (cavalieri_integral(f, xi), f.integrate()))
    check('cavalieri', point_text(eta),
          (cavalieri_integral(f, eta), f.integrate()))
    check('kochubei', point_text(xi), (kochubei_integral(xi, q), 0))

    h = random_test_function(rng, q, max_cells=3, shells=(-1, 1))
    check('keybeta', '', keybeta_sides(h, n))

    alpha = random_kernel(rng, q)
    check('m_star', point_text(xi), m_star_sides(alpha, f, xi))
    check('a_star', point_text(centers[0]),
          a_star_sides(random_kernel(rng, q, max_cells=2), f, centers[0]))
    check('fprime_r', point_text(xi), fprime_r_sides(f, xi))
    matrix, shift = random_transform(rng, q, n)
    check('equivariance', point_text(xi),
          equivariance_sides(f, matrix, shift, xi))

    logger.info('p-адический набор: q=%d, n=%d, случай %d', q, n, case)
    _log_failures(PADIC, rows)
    return rows


def run_padic_suite(cfg):
    report = Report(PADIC, PADIC_HEADER, report_config(cfg))
    grid = product(cfg.q, cfg.n, range(cfg.cases))
    report.extend(run_tasks(padic_case, cfg, grid))
    return report


def _arch_row(module, value, expected, tol, relative=True, **params):
    if value is None:
        return dict(params, module=module, status=SKIPPED)
    error = abs(value - expected)
    scale = abs(expected) if relative and expected != 0 else 1.0
    return dict(
        params,
        module=module,
        value_quad=float_text(value),
        value_formula=float_text(expected),
        abs_err=float_text(error),
        rel_err=float_text(error / scale),
        tolerance=float_text(tol),
        status=status(error <= tol * scale),
    )


def _mellin_row(comparison, tol, **params):
    return _arch_row(
        'mellin', comparison.quadrature, comparison.formula, tol,
        s=float_text(comparison.s), **params,
    )


def _reciprocity_row(pair, formula, s, tol, **params):
    if formula == 0:
        try:
            pair(PowerFunction(s))
        except PoleError:
            return dict(params, module='reciprocity', s=float_text(s),
                        value_formula='0.0', status=POLE)
        return dict(params, module='reciprocity', s=float_text(s),
                    status=FAIL)
    value = pair(PowerFunction(s)) * formula
    return _arch_row('reciprocity', value, 1.0, tol, s=float_text(s),
                     **params)


def _round_trip_row(u, radii, recovered, tol, **params):
    error = float(np.max(np.abs(recovered - u(radii))))
    scale = u.sup_norm()
    return dict(
        params,
        module='round_trip',
        r=' '.join(float_text(r) for r in radii),
        value_quad=float_text(error),
        value_formula='0.0',
        abs_err=float_text(error),
        rel_err=float_text(error / scale),
        tolerance=float_text(tol),
        status=status(error <= tol * scale),
    )


def real_case(cfg, n, k):
    rows = []
    params = {'n': n, 'k': k}
    mellin_tol = tolerance(cfg, 'MELLIN')
    for s in real_s_grid(n):
        comparison = mellin_alpha(n, k, s)
        rows.append(_mellin_row(comparison, mellin_tol, **params))
        rows.append(_reciprocity_row(
            lambda h: beta_pair(n, k, h), comparison.formula, s,
            tolerance(cfg, 'RECIPROCITY'), **params,
        ))

    zonal = np.max(np.abs(
        a_k_eval(n, k, ZONAL_SAMPLES)
        - a_k_direct(n, k, ZONAL_SAMPLES, order=ZONAL_ORDER)
    ))
    rows.append(_arch_row('zonal', float(zonal), 0.0,
                          tolerance(cfg, 'ZONAL_REAL'), **params))

    for case in range(cfg.cases):
        rng = np.random.default_rng([cfg.seed, n, k, case])
        u = random_bump(rng)
        radii = np.sort(rng.uniform(u.lower, u.upper, size=cfg.points))
        phi = m_radial(n, k, u)
        rows.append(_round_trip_row(
            u, radii, minv_apply(n, k, phi, radii),
            tolerance(cfg, 'ROUND_TRIP'), **params,
        ))
        if n in (2, 3):
            omega = rng.normal(size=n)
            omega /= np.linalg.norm(omega)
            t = float(rng.uniform(0.2, u.upper) * rng.choice((-1, 1)))
            direct = radon_direct(n, u, SectoralHarmonic(k), omega, t)
            rows.append(_arch_row(
                'direct_radon', direct,
                radon_isotypic(n, k, u, omega, t),
                tolerance(cfg, 'DIRECT_RADON'), relative=False,
                r=float_text(t), **params,
            ))
    logger.info('Вещественный набор: n=%d, k=%d', n, k)
    _log_failures(REAL, rows)
    return rows


def run_real_suite(cfg):
    report = Report(REAL, ARCHIMEDEAN_HEADER, report_config(cfg))
    report.extend(run_tasks(real_case, cfg, product(cfg.n, cfg.k)))
    return report


def complex_case(cfg, n, p, q):
    rows = []
    params = {'n': n, 'p': p, 'q': q}
    mellin_tol = tolerance(cfg, 'MELLIN')
    for s in complex_s_grid(n):
        comparison = mellin_alpha_pq(n, p, q, s)
        rows.append(_mellin_row(comparison, mellin_tol, **params))
        rows.append(_reciprocity_row(
            lambda h: beta_pq_pair(n, p, q, h), comparison.formula, s,
            tolerance(cfg, 'RECIPROCITY'), **params,
        ))

    samples = ZONAL_SAMPLES[ZONAL_SAMPLES > 0]
    zonal = np.max(np.abs(
        a_pq_eval(n, p, q, samples)
        - a_pq_direct(n, p, q, samples, order=ZONAL_ORDER)
    ))
    rows.append(_arch_row('zonal', float(zonal), 0.0,
                          tolerance(cfg, 'ZONAL_COMPLEX'), **params))

    for case in range(cfg.cases):
        rng = np.random.default_rng([cfg.seed, n, p, q, case])
        u = random_bump(rng)
        radii = np.sort(rng.uniform(u.lower, u.upper, size=cfg.points))
        phi = m_radial_complex(n, p, q, u)
        rows.append(_round_trip_row(
            u, radii, minv_apply_complex(n, p, q, phi, radii),
            tolerance(cfg, 'ROUND_TRIP'), **params,
        ))
    logger.info('Комплексный набор: n=%d, p=%d, q=%d', n, p, q)
    _log_failures(COMPLEX, rows)
    return rows


def run_complex_suite(cfg):
    report = Report(COMPLEX, ARCHIMEDEAN_HEADER, report_config(cfg))
    grid = product(cfg.n, cfg.pq, cfg.pq)
    report.extend(run_tasks(complex_case, cfg, grid))
    return report


def polygon_case(cfg, case):
    rng = np.random.default_rng([cfg.seed, case])
    polygon = random_polygon(rng)
    outer = random_extension(rng, polygon)
    inner_dual = polygon.polar_dual()
    monotone = all(
        inner_dual.contains(vertex, strict=False)
        for vertex in outer.polar_dual().vertices
    )
    return [
        {
            'module': 'involution',
            'family': 'polygon',
            'case': case,
            'component_polygon': polygon_text(polygon.vertices),
            'dual_polygon': polygon_text(inner_dual.vertices),
            'value': len(polygon),
            'status': status(inner_dual.polar_dual() == polygon),
        },
        {
            'module': 'monotone',
            'family': 'polygon',
            'case': case,
            'component_polygon': polygon_text(outer.vertices),
            'dual_polygon': polygon_text(outer.polar_dual().vertices),
            'value': len(outer),
            'status': status(monotone),
        },
    ]


def component_case(cfg, family):
    if family == 'annulus':
        bump, extent = BumpDescriptor.annulus(1.0, 2.0), ANNULUS_EXTENT
    else:
        bump = BumpDescriptor.point((1.0, 0.5), 0.25)
        extent = POINT_EXTENT
    component = zero_component_check(bump, cfg.grid, extent=extent)
    factor = settings.RADON['TOLERANCES']['HAUSDORFF_FACTOR']
    bound = factor * cfg.grid
    return [{
        'module': 'zero_component',
        'family': family,
        'grid_h': float_text(cfg.grid),
        'component_polygon': polygon_text(component.component_polygon),
        'dual_polygon': polygon_text(component.dual_polygon),
        'value': float_text(component.hausdorff),
        'expected': float_text(0.0),
        'tolerance': float_text(bound),
        'status': status(component.hausdorff <= bound),
    }]


def run_support_suite(cfg):
    report = Report(SUPPORT, SUPPORT_HEADER, report_config(cfg))
    rows = run_tasks(polygon_case, cfg, [(case,) for case in
                                         range(cfg.cases)])
    rows += run_tasks(component_case, cfg, [('annulus',), ('point',)])
    _log_failures(SUPPORT, rows)
    report.extend(rows)
    return report


def _table_row(module, comparison, **params):
    return dict(
        params,
        module=module,
        s=float_text(comparison.s),
        value_quad=float_text(comparison.quadrature),
        value_formula=float_text(comparison.formula),
        abs_err=float_text(comparison.abs_error),
        rel_err=float_text(comparison.rel_error),
    )


def mellin_table_rows(cfg, n):
    rows = []
    for k in cfg.k:
        for s in real_s_grid(n):
            rows.append(_table_row(REAL, mellin_alpha(n, k, s), n=n, k=k))
    for p, q in product(cfg.pq, cfg.pq):
        for s in complex_s_grid(n):
            rows.append(_table_row(
                COMPLEX, mellin_alpha_pq(n, p, q, s), n=n, p=p, q=q,
            ))
    return rows


def emit_mellin_table(cfg):
    report = Report(MELLIN_TABLE, MELLIN_HEADER, report_config(cfg))
    report.extend(run_tasks(mellin_table_rows, cfg, [(n,) for n in cfg.n]))
    return report


SUITES = {
    PADIC: run_padic_suite,
    REAL: run_real_suite,
    COMPLEX: run_complex_suite,
    SUPPORT: run_support_suite,
    MELLIN_TABLE: emit_mellin_table,
}


def run_suite(cfg):
    return SUITES[cfg.suite](cfg)
