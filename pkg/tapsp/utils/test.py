"""Testing utilities for tapsp"""
import os
import shutil
import tempfile

from cement.utils import test

from tapsp.cli.main import TATestApp, run


class TATestCase(test.CementTestCase):
    app_class = TATestApp

    def setUp(self):
        """Override setup actions (for every test)."""
        super(TATestCase, self).setUp()
        self.data_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Override teardown actions (for every test)."""
        super(TATestCase, self).tearDown()
        shutil.rmtree(self.data_dir, ignore_errors=True)

    def data_path(self, name, text=None):
        """Path under the per-test directory, written when text is given"""
        path = os.path.join(self.data_dir, name)
        if text is not None:
            with open(path, encoding='utf-8', mode='w') as f:
                f.write(text)
        return path

    def run_cli(self, argv):
        """Exit code of one command line run"""
        with TATestApp(argv=argv) as app:
            return run(app)
