"""Test generator interface module."""
import pytest
from src.interfaces.generator_interface import GeneratorInterface


class TestGeneratorInterface:
    """Test GeneratorInterface abstract base class implementations."""

    class ConcreteGenerator(GeneratorInterface):
        """Concrete implementation of GeneratorInterface for testing."""

        def __init__(self):
            self.log = []

        def create_report(self, data, output_path):
            self.log.append(f"Writing report to {output_path}")
            if not data:
                self.log.append("Error: No data provided")
                return False
            return output_path != "error.json"

    def test_generator_interface_subclass(self):
        generator = self.ConcreteGenerator()
        assert generator.create_report({"summary": {"fails": 0}}, "report.json") is True
        assert generator.create_report({}, "report.json") is False
        assert generator.create_report({"summary": {}}, "error.json") is False
        assert any("No data provided" in entry for entry in generator.log)


def test_generator_interface_abstract():
    """Test that GeneratorInterface cannot be instantiated directly."""
    with pytest.raises(TypeError):
        GeneratorInterface()


def test_generator_interface_requires_create_report():
    class Incomplete(GeneratorInterface):
        pass

    with pytest.raises(TypeError):
        Incomplete()
