# -*- coding: utf-8 -*-
#
import pytest

from jetforms.versioning import version_tuple_to_string

VER_TO_TUPLE = {'1': ((1,),),
        '1.0': ((1, 0),),
        '1.0.0': ((1, 0, 0),),
        '1.0a1': ((1, 0), ('a', 1)),
        '1.0b2': ((1, 0), ('b', 2)),
        '1.0rc1': ((1, 0), ('rc', 1)),
        '1.0rc1.2': ((1, 0), ('rc', 1, 2)),
        '1.0.dev345': ((1, 0), ('dev', 345)),
        '1.0a1.dev345': ((1, 0), ('a', 1), ('dev', 345)),
        '1.0a1.2.dev345': ((1, 0), ('a', 1, 2), ('dev', 345)),
        '1.0.post2': ((1, 0), ('post', 2)),
        '0.3.0': ((0, 3, 0),),
        }

@pytest.mark.parametrize('v_str,v_tuple', sorted(VER_TO_TUPLE.items()))
def test_version_tuple_to_string(v_str, v_tuple):
    '''version_tuple_to_string outputs PEP-440 compliant strings'''
    assert version_tuple_to_string(v_tuple) == v_str

def test_byte_markers():
    assert version_tuple_to_string(((1, 0), (b'rc', 3))) == '1.0rc3'

def test_unknown_marker():
    with pytest.raises(ValueError):
        version_tuple_to_string(((1, 0), ('gamma', 1)))

def test_package_versions():
    import jetforms
    from jetforms import cli, forms, geomver, jetcore, lagdsl, varcalc
    assert jetforms.__version__ == '0.3.0'
    for package in (cli, forms, geomver, jetcore, lagdsl, varcalc):
        assert package.__version__ == \
                version_tuple_to_string(package.__version_info__)
