# -*- coding: utf-8 -*-
#
import os
import random
import unittest

import pytest
import sympy as sp

from jetforms.forms.form import scalar_form
from jetforms.lagdsl import nodes
from jetforms.lagdsl.elaborate import (EXTENSION, PROBLEM_DIR, elaborate,
        load_problem, shipped_problem, shipped_problems)
from jetforms.lagdsl.exceptions import (DerivativeOrderError,
        DimensionMismatchError, ElaborationError, IndexRangeError,
        LagdslError, ParseError, UndeclaredIdentifierError)
from jetforms.lagdsl.lexer import tokenize
from jetforms.lagdsl.parser import (format_expression, format_problem, parse,
        parse_expression)
from jetforms.varcalc.euler import euler_lagrange

HEAD = 'chart { base t, x; fields phi; order 1; }\n'

def problem_text(name):
    with open(os.path.join(PROBLEM_DIR, name + EXTENSION)) as source:
        return source.read()

class TestLexer(unittest.TestCase):
    def test_tokens(self):
        tokens = tokenize('D(phi, 0) # comment\n  ^ 1/2')
        texts = [token.text for token in tokens[:-1]]
        assert texts == ['D', '(', 'phi', ',', '0', ')', '^', '1', '/', '2']
        assert tokens[6].line == 2
        assert tokens[6].column == 3

    def test_bad_character(self):
        with pytest.raises(ParseError) as error:
            tokenize('phi $ 2')
        assert error.value.line == 1
        assert error.value.column == 5

class TestParser(unittest.TestCase):
    def test_shipped(self):
        assert shipped_problems() == ['em', 'hilbert', 'kg', 'mech_oscillator']
        problem = parse(problem_text('kg'))
        assert problem.chart.base == ('t', 'x', 'y', 'z')
        assert problem.chart.order == 1
        assert problem.params == ('m2',)
        (eta,) = problem.constants
        assert eta.shape == (4, 4)
        entries = [entry for row in eta.value for entry in row]
        assert len(entries) == 16
        assert entries.count(0) == 12

    def test_round_trip(self):
        for name in shipped_problems():
            problem = parse(problem_text(name))
            assert parse(format_problem(problem)) == problem

    def test_expression_round_trip(self):
        problem = parse(problem_text('kg'))
        for text in ('-phi^2', '(1 - m2)*phi/3', 'phi^-2',
                'sum(i){ D(phi, i)*eta[i, i] }'):
            expr = parse_expression(text, problem)
            assert parse_expression(format_expression(expr), problem) == expr

    def test_positions_ignored_in_equality(self):
        first = parse(HEAD + 'lagrangian { phi; }')
        second = parse(HEAD + '\n\nlagrangian {\n    phi;\n}')
        assert first == second

    def test_syntax_errors(self):
        with pytest.raises(ParseError) as error:
            parse(HEAD + 'lagrangian { phi + ; }')
        assert error.value.line == 2
        assert '-' in error.value.expected
        with pytest.raises(ParseError):
            parse('lagrangian { 1; }')
        with pytest.raises(ParseError):
            parse(HEAD + 'params { k; }')
        with pytest.raises(ParseError):
            parse(HEAD + 'lagrangian { 1; } lagrangian { 2; }')
        with pytest.raises(ParseError):
            parse(HEAD + 'params { a__b; } lagrangian { 1; }')
        with pytest.raises(ParseError):
            parse(HEAD + 'lagrangian { ' + '(' * 200 + 'phi' + ')' * 200 +
                    '; }')

    def test_invalid_utf8(self):
        data = (HEAD + 'lagrangian { phi; }\n').encode('utf-8')
        with pytest.raises(ParseError) as error:
            parse(data + b'#\xff\n')
        assert error.value.line == 3
        assert error.value.column == 2
        assert isinstance(parse(data), nodes.ProblemFile)

    def test_elaboration_errors(self):
        with pytest.raises(DerivativeOrderError) as error:
            parse(HEAD + 'lagrangian {\n    D(phi, 0, 1);\n}')
        assert error.value.line == 3
        with pytest.raises(UndeclaredIdentifierError):
            parse(HEAD + 'lagrangian { psi; }')
        with pytest.raises(UndeclaredIdentifierError):
            parse(HEAD + 'lagrangian { D(phi, i); }')
        with pytest.raises(IndexRangeError):
            parse(HEAD + 'constants { eta = diag(1, -1); }'
                    ' lagrangian { eta[2, 0]*phi; }')
        with pytest.raises(IndexRangeError):
            parse(HEAD + 'lagrangian { D(phi, 2); }')
        with pytest.raises(DimensionMismatchError):
            parse(HEAD + 'lagrangian { phi[0]; }')
        with pytest.raises(DimensionMismatchError):
            parse(HEAD + 'constants { c = [1, 2, 3]; }'
                    ' lagrangian { sum(i){ c[i] }; }')
        assert issubclass(DimensionMismatchError, ElaborationError)

    @pytest.mark.slow
    def test_fuzz(self):
        '''Mutated inputs fail with a problem file error or not at all'''
        texts = [problem_text(name) for name in ('kg', 'mech_oscillator')]
        rng = random.Random(0)
        for _trial in range(10000):
            text = rng.choice(texts)
            position = rng.randrange(len(text))
            if rng.random() < 0.5:
                mutated = text[:position] + text[position + 1:]
            else:
                mutated = text[:position] + rng.choice(',;(){}[]*+-^/') + \
                        text[position:]
            try:
                elaborate(parse(mutated))
            except ParseError as error:
                assert error.line is not None, mutated
            except LagdslError:
                pass

class TestElaboration(unittest.TestCase):
    def test_klein_gordon(self):
        problem = shipped_problem('kg')
        chart = problem.chart
        assert chart.n == 4
        assert chart.fields == ('phi',)
        assert problem.lagrangian.order == 1
        phi = chart.fiber_symbol('phi')
        d = [chart.fiber_symbol('phi', (i,)) for i in range(4)]
        m2 = chart.param_symbol('m2')
        expected = (d[0] ** 2 - d[1] ** 2 - d[2] ** 2 - d[3] ** 2 -
                m2 * phi ** 2) / 2
        assert sp.expand(problem.lagrangian.density - expected) == 0
        assert len(sp.Add.make_args(problem.lagrangian.density)) == 5
        source = euler_lagrange(problem.lagrangian)
        second = [chart.fiber_symbol('phi', (i, i)) for i in range(4)]
        assert sp.expand(source['phi'] - (-m2 * phi - second[0] + second[1]
            + second[2] + second[3])) == 0

    def test_expression(self):
        problem = shipped_problem('kg')
        assert problem.expression('D(phi, 0)') == \
                problem.chart.fiber_symbol('phi', (0,))
        with pytest.raises(DerivativeOrderError):
            problem.expression('D(phi, 0, 1)')

    def test_vector_family(self):
        problem = shipped_problem('em')
        assert problem.chart.fields == ('A_0', 'A_1', 'A_2', 'A_3')
        assert problem.families['A'].shape == (4,)
        assert problem.reduced is None

    def test_mechanics(self):
        problem = shipped_problem('mech_oscillator.jf')
        chart = problem.chart
        q = chart.fiber_symbol('q')
        q_t = chart.fiber_symbol('q', (0,))
        k = chart.param_symbol('k')
        assert sp.expand(problem.lagrangian.density - q_t ** 2 / 2 +
                k * q ** 2 / 2) == 0

    def test_reduced_block(self):
        text = ('chart { base t; fields q; order 1; }\n'
                'lagrangian { 1/2*D(q, 0)^2 + t*D(q, 0) + q; }\n'
                'reduced {\n'
                '    lagrangian { 1/2*D(q, 0)^2; }\n'
                '    alpha[i] := t*q;\n'
                '}\n')
        problem = elaborate(parse(text))
        chart = problem.chart
        t = chart.base_symbol(0)
        q = chart.fiber_symbol('q')
        assert problem.reduced.alpha == scalar_form(chart, t * q)
        assert problem.reduced.lagrangian_prime.order == 1

    def test_symmetric_family(self):
        text = ('chart { base x0, x1; fields g[2, 2] symmetric; order 1; }\n'
                'opaque { g_inv = inverse(g); vol = sqrtabsdet(g); }\n'
                'lagrangian { vol*sum(a, b){ g_inv[a, b]*g[a, b] }; }\n')
        problem = elaborate(parse(text))
        assert problem.chart.fields == ('g_0_0', 'g_0_1', 'g_1_1')
        assert problem.lagrangian.has_atoms()
        with pytest.raises(DimensionMismatchError):
            parse('chart { base x0, x1; fields g[2, 3] symmetric;'
                    ' order 1; } lagrangian { 1; }')
        with pytest.raises(ElaborationError):
            parse('chart { base x0, x1; fields g[2, 2]; order 1; }'
                    ' opaque { vol = sqrtabsdet(g); } lagrangian { 1; }')

    @pytest.mark.slow
    def test_hilbert(self):
        problem = shipped_problem('hilbert')
        assert problem.chart.n == 4
        assert len(problem.chart.fields) == 10
        assert problem.lagrangian.order == 2
        assert problem.reduced.alpha.degree == 3

    def test_unknown(self):
        with pytest.raises(ValueError):
            shipped_problem('nope')
        with pytest.raises(IOError):
            load_problem('/nonexistent/problem.jf')
