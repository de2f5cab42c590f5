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
-----
Lexer
-----

Splits a problem file into :class:`Token` objects.  ``#`` starts a comment
that runs to the end of the line.  Numbers are unsigned integers or
decimals; a sign is always a separate token.
'''
import re
from dataclasses import dataclass

from jetforms import _
from jetforms.lagdsl.exceptions import ParseError

NUMBER = 'NUMBER'
IDENT = 'IDENT'
PUNCT = 'PUNCT'
EOF_KIND = 'EOF'

#: Punctuation, longest first
PUNCTUATION = (':=', '{', '}', '(', ')', '[', ']', ',', ';', ':', '=', '+',
        '-', '*', '/', '^')

_TOKEN = re.compile(r'''
    (?P<space>[ \t\r\f\v]+)
  | (?P<newline>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<number>[0-9]+(?:\.[0-9]+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>:=|[{}()\[\],;:=+\-*/^])
''', re.VERBOSE)

@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int

    def describe(self):
        if self.kind == EOF_KIND:
            return _('end of input')
        return repr(self.text)

def tokenize(text):
    '''Return the list of tokens of `text`, ending with an ``EOF`` token

    :raises ParseError: on a character that starts no token
    '''
    tokens = []
    line = 1
    line_start = 0
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        column = position - line_start + 1
        if match is None:
            raise ParseError(_('unexpected character %(char)r') %
                    {'char': text[position]}, line, column,
                    expected=(NUMBER, IDENT) + PUNCTUATION)
        kind = match.lastgroup
        value = match.group()
        if kind == 'newline':
            line += 1
            line_start = match.end()
        elif kind == 'number':
            tokens.append(Token(NUMBER, value, line, column))
        elif kind == 'ident':
            tokens.append(Token(IDENT, value, line, column))
        elif kind == 'punct':
            tokens.append(Token(PUNCT, value, line, column))
        position = match.end()
    tokens.append(Token(EOF_KIND, '', line, position - line_start + 1))
    return tokens

__all__ = ('EOF_KIND', 'IDENT', 'NUMBER', 'PUNCT', 'PUNCTUATION', 'Token',
        'tokenize')
