from unittest import TestCase

from general.display import display_password, node_label
from general.errors import (
    EXIT_DATA,
    EXIT_RESOURCE,
    EXIT_USAGE,
    ArgumentError,
    DataError,
    ResourceGuardError,
    exit_code_for,
)


class DisplayPasswordTests(TestCase):
    def test_plain_ascii(self):
        self.assertEqual(display_password(b"p@ss word"), "p@ss word")

    def test_utf8_kept(self):
        self.assertEqual(display_password("mot de passe é".encode()), "mot de passe é")

    def test_invalid_bytes_escaped(self):
        self.assertEqual(display_password(b"ab\xff"), "ab\\xff")

    def test_controls_and_backslash(self):
        self.assertEqual(display_password(b"a\tb\\c\x01\x7f"), "a\\tb\\x5cc\\x01\\x7f")

    def test_c1_controls(self):
        self.assertEqual(display_password("x\u0085".encode()), "x\\u0085")

    def test_distinct_passwords_stay_distinct(self):
        self.assertNotEqual(display_password(b"\\x01"), display_password(b"\x01"))
        self.assertNotEqual(display_password(b"\\x5c"), display_password(b"\\"))

    def test_trailing_backslash_is_not_left_before_a_quote(self):
        label = display_password(b"pass\\")
        self.assertEqual(label, "pass\\x5c")
        self.assertFalse(label.endswith("\\"))

    def test_xml_illegal_noncharacters_escaped(self):
        self.assertEqual(display_password(b"a\xef\xbf\xbe"), "a\\ufffe")
        self.assertEqual(display_password("b\uffff".encode()), "b\\uffff")

    def test_node_label(self):
        self.assertEqual(node_label(7, b"secret"), "secret")
        self.assertEqual(node_label(7, b"secret", redact=True), "7")


class ExitCodeTests(TestCase):
    def test_families(self):
        self.assertEqual(exit_code_for(ArgumentError("x")), EXIT_USAGE)
        self.assertEqual(exit_code_for(DataError("x")), EXIT_DATA)
        self.assertEqual(exit_code_for(ResourceGuardError("x", requested=5, budget=2)), EXIT_RESOURCE)

    def test_foreign_exceptions(self):
        self.assertEqual(exit_code_for(ValueError("x")), EXIT_USAGE)
        self.assertEqual(exit_code_for(OSError("x")), EXIT_DATA)

    def test_argument_error_is_value_error(self):
        self.assertIsInstance(ArgumentError("x"), ValueError)
