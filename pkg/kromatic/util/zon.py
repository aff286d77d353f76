# -*- coding: utf-8 -*-
# Copyright (C) 2026, the Kromatic development team
#
# Kromatic is distributed under the terms of the (new) BSD License.
# The full license can be found in 'license.txt'.

""" Module zon

Reading and writing the indentation-based object notation used for the
kromatic config files. Supported values are dict, list, int, float, str
and None. A document looks like::

    dict:
      settings = dict:
        workers = 1
        name = 'abc'
      sizes = [1, 2, 3]

Nested containers are written on their own indented block; lists of
scalars are written inline.

"""

import re


## Dict class

def isidentifier(s):
    return isinstance(s, str) and s.isidentifier()


class Dict(dict):
    """ A dict whose items can also be get and set as attributes.
    """

    __reserved_names__ = dir(dict())

    __slots__ = []

    def __repr__(self):
        items = ['%s=%r' % (key, val) for key, val in self.items()]
        return 'Dict(%s)' % ', '.join(items)

    def __getattr__(self, key):
        try:
            return self[key]
        except KeyError:
            raise AttributeError(key)

    def __setattr__(self, key, val):
        if key in Dict.__reserved_names__:
            raise AttributeError('Reserved name, this key can only ' +
                                 'be set via ``d[%r] = X``' % key)
        self[key] = val

    def __dir__(self):
        names = [k for k in self.keys() if isidentifier(k)]
        return Dict.__reserved_names__ + names


## Public functions

def new():
    """ new()
    Create a new Dict object.
    """
    return Dict()


def copy(ob):
    """ copy(ob)
    Deep copy of the given object. Dicts become Dict, tuples become lists.
    """
    if isinstance(ob, dict):
        return Dict((key, copy(val)) for key, val in ob.items())
    elif isinstance(ob, (tuple, list)):
        return [copy(val) for val in ob]
    else:
        return ob


def loads(text):
    """ loads(text)
    Load a Dict from the given string. Raises ValueError with the line
    number for text that cannot be parsed.
    """
    if not isinstance(text, str):
        raise ValueError('zon.loads() expects a string.')
    return _Reader().read(text)


def load(filename):
    """ load(filename)
    Load a Dict from the given file.
    """
    with open(filename, 'rb') as f:
        return loads(f.read().decode('utf-8'))


def saves(d):
    """ saves(d)
    Serialize the given dict to a string.
    """
    if not isinstance(d, dict):
        raise ValueError('zon.saves() expects a dict.')
    lines = ['# -*- coding: utf-8 -*-', '']
    lines.extend(_dump_dict(d, -2)[1:])
    return '\n'.join(lines) + '\n'


def save(filename, d):
    """ save(filename, d)
    Serialize the given dict to the given file.
    """
    text = saves(d)
    with open(filename, 'wb') as f:
        f.write(text.encode('utf-8'))


## Writing

def _dump(name, value, indent):
    if value is None:
        data = ['None']
    elif isinstance(value, bool):
        data = [repr(int(value))]
    elif isinstance(value, (int, float)):
        data = [repr(value)]
    elif isinstance(value, str):
        data = [_quote(value)]
    elif isinstance(value, dict):
        data = _dump_dict(value, indent)
    elif isinstance(value, (list, tuple)):
        data = _dump_list(value, indent)
    else:
        raise ValueError('zon cannot store %r' % type(value).__name__)
    prefix = ' ' * indent
    if name:
        prefix += '%s = ' % name
    data[0] = prefix + data[0]
    return data


def _dump_dict(value, indent):
    lines = ['dict:']
    for key, val in value.items():
        if not isidentifier(key):
            raise ValueError('zon keys must be identifiers, got %r' % key)
        lines.extend(_dump(key, val, indent + 2))
    return lines


def _dump_list(value, indent):
    if all(isinstance(v, (int, float, str)) for v in value):
        return ['[%s]' % ', '.join(_dump(None, v, 0)[0] for v in value)]
    lines = ['list:']
    for val in value:
        lines.extend(_dump(None, val, indent + 2))
    return lines


def _quote(value):
    value = value.replace('\\', '\\\\').replace('\n', '\\n')
    value = value.replace('\r', '\\r').replace("'", "\\'")
    return "'" + value + "'"


def _unquote(value):
    out, escape = [], False
    for c in value:
        if escape:
            out.append({'n': '\n', 'r': '\r'}.get(c, c))
            escape = False
        elif c == '\\':
            escape = True
        else:
            out.append(c)
    return ''.join(out)


## Reading

_NAME_RE = re.compile(r'^(\w+) *= *')
_STRING_RE = re.compile(r"'((?:[^'\\]|\\.)*)'")


class _Reader(object):

    def read(self, text):
        root = Dict()
        stack = []
        pending = None  # container opened on the previous line

        for i, line in enumerate(text.splitlines()):
            linenr = i + 1
            stripped = line.lstrip()
            if not stripped or stripped.startswith('#'):
                continue
            indent = len(line) - len(stripped)

            if not stack:
                stack.append((indent, root))
            elif pending is not None and indent > stack[-1][0]:
                stack.append((indent, pending))
            pending = None
            while len(stack) > 1 and indent < stack[-1][0]:
                stack.pop()
            if indent != stack[-1][0]:
                raise ValueError('zon: wrong indentation on line %i' % linenr)

            m = _NAME_RE.match(stripped)
            if m:
                name, data = m.group(1), stripped[m.end():]
            else:
                name, data = None, stripped

            value = self.parse_value(data, linenr)
            container = stack[-1][1]
            if isinstance(container, dict):
                if name is None:
                    raise ValueError('zon: unnamed item in dict on line %i'
                                     % linenr)
                container[name] = value
            else:
                if name is not None:
                    raise ValueError('zon: named item in list on line %i'
                                     % linenr)
                container.append(value)
            if data.strip() in ('dict:', 'list:'):
                pending = value

        return root

    def parse_value(self, data, linenr):
        data = data.strip()
        if not data:
            raise ValueError('zon: no value on line %i' % linenr)
        if data == 'dict:':
            return Dict()
        if data == 'list:':
            return []
        if data.startswith('['):
            return self.parse_list(data, linenr)
        if data.startswith("'"):
            m = _STRING_RE.match(data)
            if not m:
                raise ValueError('zon: unterminated string on line %i'
                                 % linenr)
            return _unquote(m.group(1))
        if data.startswith(('None', 'Null')):
            return None
        number = data.partition('#')[0].strip()
        try:
            return int(number)
        except ValueError:
            pass
        try:
            return float(number)
        except ValueError:
            raise ValueError('zon: cannot parse value on line %i' % linenr)

    def parse_list(self, data, linenr):
        if not data.rstrip().endswith(']'):
            raise ValueError('zon: list not closed on line %i' % linenr)
        body = data.strip()[1:-1]
        pieces, current, in_string, escape = [], [], False, False
        for c in body:
            if in_string:
                current.append(c)
                if escape:
                    escape = False
                elif c == '\\':
                    escape = True
                elif c == "'":
                    in_string = False
            elif c == "'":
                in_string = True
                current.append(c)
            elif c == ',':
                pieces.append(''.join(current))
                current = []
            else:
                current.append(c)
        if ''.join(current).strip():
            pieces.append(''.join(current))
        return [self.parse_value(p, linenr) for p in pieces]
