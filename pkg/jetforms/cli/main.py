# -*- coding: utf-8 -*-
#
# Copyright (c) 2026 The jetforms developers
#
# jetforms is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation; either
# version 2.1 of the License, or (at your option) any later version.
#
# jetforms is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with jetforms; if not, see <http://www.gnu.org/licenses/>
#
'''
----------------------
Command line interface
----------------------

``jetforms COMMAND [options] FILE`` runs one operation on a problem file::

    jetforms el em.jf --format json
    jetforms lepage --kind canonical kg.jf --format latex
    jetforms vt kg.jf
    jetforms split kg.jf
    jetforms check --closure --numeric 20 --seed 42 trivial.jf
    jetforms noether --xi 't = 1' kg.jf

A FILE that does not exist is looked up among the shipped problems, so
``kg.jf`` always works.

Exit status is 0 on success, 1 when a verification fails and 2 on bad
input.
'''
import argparse
import logging
import os
import sys

import sympy as sp

from jetforms import _, settings
from jetforms.cli.render import (FORMATS, TEXT, render_document,
        render_lagrangian, render_report, render_source)
from jetforms.exceptions import JetformsError, VerificationError
from jetforms.forms.form import DiffForm
from jetforms.forms.vector import VectorFieldSpec
from jetforms.geomver.checks import (VerificationReport,
        numeric_identity_check, numeric_zero_check)
from jetforms.lagdsl import nodes
from jetforms.lagdsl.elaborate import (family_field, load_problem,
        shipped_problem, shipped_problems)
from jetforms.lagdsl.parser import parse_expression
from jetforms.varcalc.conditions import verify_lepage_conditions
from jetforms.varcalc.euler import euler_lagrange, is_trivial
from jetforms.varcalc.homotopy import (homotopy_I, homotopy_residual,
        vainberg_tonti)
from jetforms.varcalc.lepage import (CANONICAL, KINDS, PRINCIPAL, REDUCED,
        canonical_split, lepage_equivalent)
from jetforms.varcalc.noether import current_components, noether_current

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

#: Names of the forms produced by each kind of Lepage equivalent
FORM_NAMES = {PRINCIPAL: 'theta', 'fundamental': 'rho', CANONICAL: 'phi',
        REDUCED: 'phi_reduced'}

#: Trials run on charts with opaque symbols, where residuals are decided
#: numerically, when ``--numeric`` is not given
DEFAULT_OPAQUE_TRIALS = 10

def build_parser():
    '''The :mod:`argparse` parser of the ``jetforms`` command'''
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS,
            default=argparse.SUPPRESS,
            help=_('output format (default: text)'))
    common.add_argument('--max-order', type=int, metavar='K',
            default=argparse.SUPPRESS,
            help=_('highest jet order of the chart (default: %(default)s'
                ' or $%(env)s)') % {'default': settings.DEFAULT_MAX_ORDER,
                    'env': settings.MAX_ORDER_ENV})
    common.add_argument('--out', metavar='PATH', default=argparse.SUPPRESS,
            help=_('write the result to PATH instead of stdout'))
    common.add_argument('--verbose', action='store_true',
            default=argparse.SUPPRESS,
            help=_('log progress and show complete residuals'))

    parser = argparse.ArgumentParser(prog='jetforms', parents=[common],
            description=_('Euler-Lagrange forms and Lepage equivalents of'
                ' Lagrangians on jet bundles'))
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    def command(name, help_text):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument('file', metavar='FILE',
                help=_('problem file (.jf)'))
        return sub

    command('el', _('Euler-Lagrange form'))
    lepage = command('lepage', _('Lepage equivalent'))
    lepage.add_argument('--kind', choices=KINDS, default=PRINCIPAL,
            help=_('which Lepage equivalent (default: principal)'))
    command('vt', _('Vainberg-Tonti Lagrangian'))
    command('split', _("canonical splitting lambda = lambda_VT + h d alpha"))

    check = command('check', _('run a verification suite'))
    suites = check.add_mutually_exclusive_group(required=True)
    for suite, help_text in (
            ('lepage', _('the Lepage conditions h theta = lambda and'
                ' p1 d theta = E')),
            ('closure', _('d Phi = 0 exactly for trivial Lagrangians,'
                ' p1 d Phi = E otherwise')),
            ('homotopy', _('rho = I d rho + d I rho + 0* rho')),
            ('gauge', _('gauge behaviour under A_i -> A_i + d_i f'))):
        suites.add_argument('--' + suite, dest='suite', action='store_const',
                const=suite, help=help_text)
    check.add_argument('--kind', choices=KINDS, default=None,
            help=_('Lepage equivalent to check (default: principal for'
                ' --lepage, canonical for --closure)'))
    check.add_argument('--numeric', type=int, default=0, metavar='N',
            help=_('cross-check numerically at N random jet points, exterior'
                ' derivatives taken by directional derivatives'))
    check.add_argument('--seed', type=int, default=settings.DEFAULT_SEED,
            metavar='S', help=_('seed of the random jet points'))

    noether = command('noether', _('Noether current of a vector field'))
    noether.add_argument('--xi', required=True, metavar='SPEC',
            help=_("components as 'x = expr; phi = expr', base"
                " coordinates and fields in problem file syntax"))
    noether.add_argument('--kind', choices=KINDS, default=PRINCIPAL,
            help=_('Lepage equivalent to contract (default: principal)'))
    return parser

#
# Helpers
#

def load(path, max_order=None):
    '''Load a problem file, falling back to the shipped problems'''
    if not os.path.exists(path):
        name = os.path.basename(path)
        if name.endswith('.jf'):
            name = name[:-3]
        if name in shipped_problems():
            return shipped_problem(name, max_order=max_order)
    return load_problem(path, max_order=max_order)

def _reduced(problem):
    if problem.reduced is None:
        return None
    return (problem.reduced.lagrangian_prime, problem.reduced.alpha)

def _lepage(problem, kind):
    if kind == REDUCED and problem.reduced is None:
        raise ValueError(_('the problem has no reduced block'))
    return lepage_equivalent(problem.lagrangian, kind, _reduced(problem))

def _first_term(form):
    monomial, coeff = form.sorted_terms()[0]
    return '(%s) %s' % (sp.sstr(coeff), ' ^ '.join(factor.label()
        for factor in monomial))

def _describe_residual(residual, verbose):
    if isinstance(residual, DiffForm) and not residual.is_zero():
        if verbose:
            return str(residual)
        return _('first offending term: %(term)s') % {
                'term': _first_term(residual)}
    if residual is not None:
        return str(residual)
    return None

#
# Commands
#

def run_el(problem, args):
    source = euler_lagrange(problem.lagrangian)
    return render_source(source, args.format), EXIT_OK

def run_lepage(problem, args):
    result = _lepage(problem, args.kind)
    sections = [('kind', result.kind), ('order', result.form.order)]
    if not result.form.has_atoms():
        sections.append(('natural_order', result.natural_order))
    sections.append((FORM_NAMES[result.kind], result.form))
    return render_document(sections, args.format), EXIT_OK

def run_vt(problem, args):
    lambda_vt = vainberg_tonti(euler_lagrange(problem.lagrangian))
    return render_lagrangian(lambda_vt, args.format, 'lambda_vt'), EXIT_OK

def run_split(problem, args):
    split = canonical_split(problem.lagrangian)
    return render_document([('lambda_vt', split.lambda_vt),
        ('alpha', split.alpha), ('d_alpha', split.d_alpha)],
        args.format), EXIT_OK

def _lepage_residuals(problem, kind):
    result = _lepage(problem, kind or PRINCIPAL)
    theta = result.form
    residuals = verify_lepage_conditions(result,
            problem.lagrangian).residual_forms()
    if result.provenance.get('split_checked') is False:
        residuals.append(('split', result.provenance['split_residual']))
    identities = [('h_theta', [(1, theta.horizontal(), False),
        (-1, problem.lagrangian.form(), False)]),
        ('d_theta', [(1, theta.exterior_derivative(), False),
            (-1, theta, True)])]
    return residuals, identities, []

def _closure_residuals(problem, kind):
    phi = _lepage(problem, kind or CANONICAL).form
    d_phi = phi.exterior_derivative()
    if is_trivial(problem.lagrangian):
        return [('d_phi', d_phi)], [('d_phi', [(1, phi, True)])], []
    source = euler_lagrange(problem.lagrangian).form()
    return [('p1_d_phi', d_phi.contact_component(1) - source)], \
            [('d_phi', [(1, d_phi, False), (-1, phi, True)])], []

def _homotopy_identity(rho):
    terms = [(1, rho, False),
            (-1, homotopy_I(rho.exterior_derivative()), False),
            (-1, rho.pullback_zero_section(), False)]
    if rho.degree:
        terms.append((-1, homotopy_I(rho), True))
    return terms

def _homotopy_residuals(problem, kind):
    theta = _lepage(problem, kind or PRINCIPAL).form
    rhos = [('lagrangian', problem.lagrangian.form()), ('theta', theta),
            ('d_theta', theta.exterior_derivative())]
    return [(name, homotopy_residual(rho)) for name, rho in rhos], \
            [(name, _homotopy_identity(rho)) for name, rho in rhos], []

def vector_potential(problem):
    '''The first family with one index over the base, or :data:`None`'''
    for decl in problem.source.chart.fields:
        if decl.shape == (problem.chart.n,) and not decl.symmetric:
            return decl
    return None

def gauge_shifts(problem, decl):
    '''``A_i -> A_i + d_i f`` for an undefined function ``f`` of the base'''
    chart = problem.chart
    gauge = sp.Function('f')(*chart.base_symbols)
    return dict((family_field(decl, (index,)),
        sp.diff(gauge, chart.base_symbol(index)))
        for index in range(chart.n))

def _gauge_residuals(problem, kind):
    decl = vector_potential(problem)
    if decl is None:
        raise ValueError(_('the problem declares no vector potential family'
            ' A[%(n)s]') % {'n': problem.chart.n})
    shifts = gauge_shifts(problem, decl)
    theta = _lepage(problem, PRINCIPAL).form
    phi = _lepage(problem, kind or CANONICAL).form
    d_phi = phi.exterior_derivative()
    failures = []
    if (phi.translate_fibers(shifts) - phi).is_zero():
        failures.append(_('phi is gauge invariant, expected only d phi to'
            ' be'))
    return [('theta', theta.translate_fibers(shifts) - theta),
            ('d_phi', d_phi.translate_fibers(shifts) - d_phi)], [], failures

_SUITES = {'lepage': _lepage_residuals, 'closure': _closure_residuals,
        'homotopy': _homotopy_residuals, 'gauge': _gauge_residuals}

def run_check(problem, args):
    '''Run one suite: symbolic residuals, then with ``--numeric N`` (or on
    charts with opaque symbols) the seeded numeric cross-checks

    The reported trial count is the number of points every numeric check
    actually evaluated.
    '''
    residuals, identities, failures = _SUITES[args.suite](problem, args.kind)
    opaque = bool(problem.chart.opaque_symbols)
    trials = args.numeric
    if opaque and not trials:
        trials = DEFAULT_OPAQUE_TRIALS
    if args.suite == 'gauge':
        # residuals hold the undefined gauge function f
        trials = 0
    report = VerificationReport(args.suite, args.seed, 0)
    report.failures.extend(failures)
    numeric = []
    for name, residual in residuals:
        if residual.is_zero():
            continue
        if not opaque:
            report.failures.append('%s: %s' % (name,
                _describe_residual(residual, args.verbose)))
        if trials:
            numeric.append(numeric_zero_check(residual, trials, args.seed,
                suite=name))
    if trials:
        for name, terms in identities:
            numeric.append(numeric_identity_check(terms, trials, args.seed,
                suite=name))
    for result in numeric:
        report.max_residual = max(report.max_residual, result.max_residual)
        report.resampled += result.resampled
        report.failures.extend('%s: %s' % (result.suite, failure)
                for failure in result.failures)
    if numeric:
        report.trials = min(result.trials for result in numeric)
    log.debug('%s check: %s numeric checks, %s failures', args.suite,
            len(numeric), len(report.failures))
    code = EXIT_OK if report.passed else EXIT_FAILED
    return render_report(report, args.format, args.verbose), code

def parse_xi(problem, text):
    '''Read ``--xi``: ``name = expr`` pairs separated by ``;``

    Names are base coordinates or fields, family components written
    ``A[0]``.

    :returns: ``(xi, Xi)`` for :class:`~jetforms.forms.vector.VectorFieldSpec`
    '''
    chart = problem.chart
    xi = {}
    Xi = {}
    for part in text.split(';'):
        if not part.strip():
            continue
        name, sep, value = part.partition('=')
        if not sep:
            raise ValueError(_('expected name = expression, got %(part)r') %
                    {'part': part.strip()})
        target = parse_expression(name, problem.source)
        if not isinstance(target, nodes.Name) or not all(
                isinstance(index, int) for index in target.indices):
            raise ValueError(_('%(name)r is not a coordinate') %
                    {'name': name.strip()})
        expr = problem.expression(value)
        if target.name in chart.base_names:
            xi[chart.base_names.index(target.name)] = expr
        elif target.name in problem.families:
            Xi[family_field(problem.families[target.name],
                target.indices)] = expr
        else:
            raise ValueError(_('%(name)r is neither a base coordinate nor a'
                ' field') % {'name': target.name})
    return xi, Xi

def run_noether(problem, args):
    xi, Xi = parse_xi(problem, args.xi)
    field = VectorFieldSpec(problem.chart, xi, Xi)
    current = noether_current(_lepage(problem, args.kind), field)
    components = [sp.sstr(value) for value in current_components(current)]
    return render_document([('current', current),
        ('components', components)], args.format), EXIT_OK

COMMANDS = {'el': run_el, 'lepage': run_lepage, 'vt': run_vt,
        'split': run_split, 'check': run_check, 'noether': run_noether}

#
# Entry point
#

def _write(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, 'w', encoding='utf-8') as output:
        output.write(text)

def main(argv=None):
    '''Run the ``jetforms`` command

    :kwarg argv: arguments without the program name, default
        ``sys.argv[1:]``
    :returns: the exit status
    '''
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit:
        return exit.code if isinstance(exit.code, int) else EXIT_INPUT
    for name, default in (('format', TEXT), ('max_order', None),
            ('out', None), ('verbose', False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    logging.basicConfig(level=logging.DEBUG if args.verbose
            else logging.WARNING,
            format='%(levelname)s %(name)s: %(message)s')
    try:
        problem = load(args.file, args.max_order)
        text, code = COMMANDS[args.command](problem, args)
    except VerificationError as error:
        sys.stderr.write(_('jetforms: verification failed: %(error)s\n') %
                {'error': error})
        detail = _describe_residual(error.residual, args.verbose)
        if detail:
            sys.stderr.write(detail + '\n')
        return EXIT_FAILED
    except (JetformsError, ValueError, OSError) as error:
        sys.stderr.write(_('jetforms: error: %(error)s\n') % {'error': error})
        return EXIT_INPUT
    _write(text, args.out)
    return code

__all__ = ('COMMANDS', 'DEFAULT_OPAQUE_TRIALS', 'EXIT_FAILED', 'EXIT_INPUT',
        'EXIT_OK', 'FORM_NAMES', 'build_parser', 'gauge_shifts', 'load',
        'main', 'parse_xi', 'run_check', 'run_el', 'run_lepage',
        'run_noether', 'run_split', 'run_vt', 'vector_potential')
