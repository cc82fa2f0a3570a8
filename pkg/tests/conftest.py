import pytest
import requests


class OfflineSession:
    """必ず接続エラーになるセッション"""

    def __init__(self):
        self.calls = 0

    def get(self, url, timeout=None):
        self.calls += 1
        raise requests.ConnectionError(f"offline: {url}")


class FakeResponse:
    def __init__(self, content, status_code=200):
        self.content = content
        self.status_code = status_code

    def raise_for_status(self):
        if self.status_code >= 400:
            raise requests.HTTPError(f"HTTP {self.status_code}")


class RecordingSession:
    """固定のバイト列を返すセッション"""

    def __init__(self, content, status_code=200):
        self.content = content
        self.status_code = status_code
        self.urls = []

    def get(self, url, timeout=None):
        self.urls.append(url)
        return FakeResponse(self.content, self.status_code)


@pytest.fixture(autouse=True)
def isolated_env(tmp_path, monkeypatch):
    """キャッシュ・ログ・設定を一時ディレクトリに隔離"""
    monkeypatch.setenv("BLOCKSUM_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("BLOCKSUM_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setenv("BLOCKSUM_SETTINGS", str(tmp_path / "settings.json"))


@pytest.fixture
def cache_dir(tmp_path):
    path = tmp_path / "cache"
    path.mkdir(exist_ok=True)
    return str(path)


@pytest.fixture
def offline_session():
    return OfflineSession()


@pytest.fixture
def recording_session():
    return RecordingSession
