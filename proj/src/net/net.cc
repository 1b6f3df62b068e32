// Copyright 2026 The zkgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zkg/net/net.h"

#include <charconv>
#include <deque>
#include <future>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include "zkg/channel/wire.h"

namespace zkg::net {
namespace {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;
using boost::system::error_code;

Error NetError(std::string_view what, const error_code& ec) {
  if (ec == asio::error::eof || ec == asio::error::connection_reset ||
      ec == asio::error::operation_aborted || ec == asio::error::broken_pipe ||
      ec == websocket::error::closed || ec == asio::error::not_connected ||
      ec == asio::error::bad_descriptor) {
    return MakeError(Errc::kConnectionClosed, std::string(what) + ": " + ec.message());
  }
  return MakeError(Errc::kIoError, std::string(what) + ": " + ec.message());
}

// One complete wire message, length prefix included.
Status CheckWireMessage(ByteView msg) {
  if (msg.size() < channel::kLengthPrefixBytes) {
    return MakeError(Errc::kProtocolError, "short message");
  }
  ZKG_ASSIGN_OR_RETURN(uint32_t len,
                       channel::DecodeLengthPrefix(msg.first(channel::kLengthPrefixBytes)));
  if (msg.size() != channel::kLengthPrefixBytes + len) {
    return MakeError(Errc::kProtocolError, "length prefix does not match message size");
  }
  return OkStatus();
}

class TcpTransport : public channel::MessageTransport {
 public:
  TcpTransport(std::unique_ptr<asio::io_context> io, tcp::socket socket)
      : io_(std::move(io)), socket_(std::move(socket)) {
    error_code ec;
    socket_.set_option(tcp::no_delay(true), ec);
  }
  ~TcpTransport() override {
    error_code ec;
    socket_.close(ec);
  }

  Status Send(ByteView wire_message) override {
    ZKG_RETURN_IF_ERROR(CheckWireMessage(wire_message));
    std::lock_guard lock(send_mu_);
    error_code ec;
    asio::write(socket_, asio::buffer(wire_message.data(), wire_message.size()), ec);
    if (ec) return NetError("send", ec);
    return OkStatus();
  }

  Result<Bytes> Receive() override {
    Bytes msg(channel::kLengthPrefixBytes);
    error_code ec;
    asio::read(socket_, asio::buffer(msg), ec);
    if (ec) return NetError("receive", ec);
    ZKG_ASSIGN_OR_RETURN(uint32_t len, channel::DecodeLengthPrefix(msg));
    msg.resize(channel::kLengthPrefixBytes + len);
    asio::read(socket_, asio::buffer(msg.data() + channel::kLengthPrefixBytes, len), ec);
    if (ec) return NetError("receive", ec);
    return msg;
  }

  void Close() override {
    error_code ec;
    socket_.shutdown(tcp::socket::shutdown_both, ec);
  }

 private:
  std::unique_ptr<asio::io_context> io_;
  tcp::socket socket_;
  std::mutex send_mu_;
};

// All stream operations run on a private io thread, which is what Beast
// requires of a websocket stream used for concurrent reads and writes.
class WsTransport : public channel::MessageTransport {
 public:
  using Stream = websocket::stream<tcp::socket>;

  WsTransport(std::unique_ptr<asio::io_context> io, Stream ws)
      : io_(std::move(io)), ws_(std::move(ws)), guard_(asio::make_work_guard(*io_)) {
    ws_.binary(true);
    ws_.read_message_max(channel::kMaxMessageBytes + channel::kLengthPrefixBytes);
    asio::post(*io_, [this] { ReadNext(); });
    thread_ = std::thread([this] { io_->run(); });
  }

  ~WsTransport() override {
    asio::post(*io_, [this] {
      error_code ec;
      beast::get_lowest_layer(ws_).close(ec);
    });
    guard_.reset();
    thread_.join();
  }

  Status Send(ByteView wire_message) override {
    ZKG_RETURN_IF_ERROR(CheckWireMessage(wire_message));
    std::lock_guard lock(send_mu_);
    std::promise<error_code> done;
    auto result = done.get_future();
    asio::post(*io_, [&] {
      ws_.async_write(asio::buffer(wire_message.data(), wire_message.size()),
                      [&](error_code ec, size_t) { done.set_value(ec); });
    });
    if (error_code ec = result.get()) return NetError("send", ec);
    return OkStatus();
  }

  Result<Bytes> Receive() override {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return !inbox_.empty() || closed_; });
    if (inbox_.empty()) return read_error_;
    Bytes msg = std::move(inbox_.front());
    inbox_.pop_front();
    lock.unlock();
    ZKG_RETURN_IF_ERROR(CheckWireMessage(msg));
    return msg;
  }

  void Close() override {
    {
      std::lock_guard lock(mu_);
      if (!closed_) {
        closed_ = true;
        read_error_ = MakeError(Errc::kConnectionClosed, "closed locally");
      }
    }
    cv_.notify_all();
    asio::post(*io_, [this] {
      if (closing_) return;
      closing_ = true;
      if (ws_.is_open()) {
        ws_.async_close(websocket::close_code::normal, [this](error_code) {
          error_code ignored;
          beast::get_lowest_layer(ws_).shutdown(tcp::socket::shutdown_both, ignored);
        });
      }
    });
  }

 private:
  void ReadNext() {
    ws_.async_read(buffer_, [this](error_code ec, size_t) {
      std::unique_lock lock(mu_);
      if (ec) {
        if (!closed_) read_error_ = NetError("receive", ec);
        closed_ = true;
        lock.unlock();
        cv_.notify_all();
        return;
      }
      auto data = buffer_.cdata();
      const auto* p = static_cast<const uint8_t*>(data.data());
      inbox_.emplace_back(p, p + data.size());
      buffer_.consume(buffer_.size());
      lock.unlock();
      cv_.notify_all();
      ReadNext();
    });
  }

  std::unique_ptr<asio::io_context> io_;
  Stream ws_;
  asio::executor_work_guard<asio::io_context::executor_type> guard_;
  beast::flat_buffer buffer_;
  bool closing_ = false;  // io thread only
  std::thread thread_;
  std::mutex send_mu_;

  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Bytes> inbox_;
  bool closed_ = false;
  Error read_error_;
};

}  // namespace

Result<Endpoint> ParseEndpoint(std::string_view text) {
  const size_t colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    return MakeError(Errc::kInvalidArgument, "expected host:port, got '" + std::string(text) + "'");
  }
  Endpoint ep;
  ep.host = std::string(text.substr(0, colon));
  std::string_view port = text.substr(colon + 1);
  unsigned value = 0;
  auto [end, ec] = std::from_chars(port.data(), port.data() + port.size(), value);
  if (ec != std::errc() || end != port.data() + port.size() || value > 65535) {
    return MakeError(Errc::kInvalidArgument, "bad port in '" + std::string(text) + "'");
  }
  ep.port = static_cast<uint16_t>(value);
  return ep;
}

Result<ServerAddress> ParseAddress(std::string_view text) {
  ServerAddress addr;
  std::string_view rest = text;
  if (rest.substr(0, 6) == "tcp://") {
    rest.remove_prefix(6);
  } else if (rest.substr(0, 5) == "ws://") {
    rest.remove_prefix(5);
    addr.scheme = Scheme::kWebSocket;
    const size_t slash = rest.find('/');
    if (slash != std::string_view::npos) {
      addr.path = std::string(rest.substr(slash));
      rest = rest.substr(0, slash);
    }
  } else if (rest.find("://") != std::string_view::npos) {
    return MakeError(Errc::kInvalidArgument, "unsupported scheme in '" + std::string(text) + "'");
  }
  ZKG_ASSIGN_OR_RETURN(addr.endpoint, ParseEndpoint(rest));
  return addr;
}

Result<std::unique_ptr<channel::MessageTransport>> Connect(const ServerAddress& address) {
  auto io = std::make_unique<asio::io_context>();
  tcp::resolver resolver(*io);
  error_code ec;
  auto results = resolver.resolve(address.endpoint.host,
                                  std::to_string(address.endpoint.port), ec);
  if (ec) return NetError("resolve", ec);
  tcp::socket socket(*io);
  asio::connect(socket, results, ec);
  if (ec) return NetError("connect", ec);
  if (address.scheme == Scheme::kTcp) {
    return std::unique_ptr<channel::MessageTransport>(
        new TcpTransport(std::move(io), std::move(socket)));
  }
  WsTransport::Stream ws(std::move(socket));
  ws.handshake(address.endpoint.host + ":" + std::to_string(address.endpoint.port),
               address.path, ec);
  if (ec) return NetError("websocket handshake", ec);
  return std::unique_ptr<channel::MessageTransport>(
      new WsTransport(std::move(io), std::move(ws)));
}

struct Listener::Impl {
  asio::io_context io;
  tcp::acceptor acceptor{io};
  std::unique_ptr<asio::io_context> next_io;
};

Listener::Listener(Scheme scheme, Handler handler)
    : scheme_(scheme), handler_(std::move(handler)), impl_(std::make_unique<Impl>()) {}

Listener::~Listener() {
  StopAccepting();
  WaitForConnections();
}

Result<std::unique_ptr<Listener>> Listener::Bind(Scheme scheme, const Endpoint& endpoint,
                                                 Handler handler) {
  std::unique_ptr<Listener> l(new Listener(scheme, std::move(handler)));
  error_code ec;
  auto addr = asio::ip::make_address(endpoint.host == "localhost" ? "127.0.0.1" : endpoint.host,
                                     ec);
  if (ec) return NetError("bad listen address " + endpoint.host, ec);
  tcp::endpoint ep(addr, endpoint.port);
  auto& acc = l->impl_->acceptor;
  acc.open(ep.protocol(), ec);
  if (!ec) acc.set_option(tcp::acceptor::reuse_address(true), ec);
  if (!ec) acc.bind(ep, ec);
  if (!ec) acc.listen(asio::socket_base::max_listen_connections, ec);
  if (ec) return NetError("listen on " + endpoint.host + ":" + std::to_string(endpoint.port), ec);
  l->port_ = acc.local_endpoint().port();

  Listener* self = l.get();
  // The accept loop re-arms itself from its own completion handler.
  struct Loop {
    Listener* self;
    void operator()() const {
      auto& impl = *self->impl_;
      impl.next_io = std::make_unique<asio::io_context>();
      impl.acceptor.async_accept(*impl.next_io, [self = self](error_code ec, tcp::socket s) {
        if (ec) return;  // acceptor closed
        auto conn_io = std::move(self->impl_->next_io);
        self->ConnectionStarted();
        std::thread([self, io = std::move(conn_io), s = std::move(s)]() mutable {
          std::unique_ptr<channel::MessageTransport> t;
          if (self->scheme_ == Scheme::kTcp) {
            t = std::make_unique<TcpTransport>(std::move(io), std::move(s));
          } else {
            WsTransport::Stream ws(std::move(s));
            error_code hs;
            ws.accept(hs);
            if (!hs) t = std::make_unique<WsTransport>(std::move(io), std::move(ws));
          }
          if (t) self->handler_(std::move(t));
          self->ConnectionFinished();
        }).detach();
        Loop{self}();
      });
    }
  };
  Loop{self}();
  l->accept_thread_ = std::thread([self] { self->impl_->io.run(); });
  return l;
}

void Listener::StopAccepting() {
  if (!accept_thread_.joinable()) return;
  asio::post(impl_->io, [this] {
    error_code ec;
    impl_->acceptor.close(ec);
  });
  accept_thread_.join();
}

void Listener::WaitForConnections() {
  std::unique_lock lock(mu_);
  idle_cv_.wait(lock, [&] { return active_ == 0; });
}

void Listener::ConnectionStarted() {
  std::lock_guard lock(mu_);
  ++active_;
}

void Listener::ConnectionFinished() {
  // Notify under the lock: the listener may be destroyed as soon as it
  // is released.
  std::lock_guard lock(mu_);
  --active_;
  idle_cv_.notify_all();
}

}  // namespace zkg::net
