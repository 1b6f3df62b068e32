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

#ifndef ZKG_CHANNEL_TRANSPORT_H_
#define ZKG_CHANNEL_TRANSPORT_H_

#include <condition_variable>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "zkg/base/bytes.h"
#include "zkg/base/result.h"
#include "zkg/channel/wire.h"

namespace zkg::channel {

// Reliable, ordered carrier of whole wire messages (length prefix included).
// Send and Receive may be called concurrently from different threads, but
// each only from one thread at a time.
class MessageTransport {
 public:
  virtual ~MessageTransport() = default;

  virtual Status Send(ByteView wire_message) = 0;
  // kConnectionClosed once the peer is gone.
  virtual Result<Bytes> Receive() = 0;
  virtual void Close() = 0;
};

// In-process transport pair backed by two message queues.
class MemoryTransport : public MessageTransport {
 public:
  static std::pair<std::unique_ptr<MemoryTransport>, std::unique_ptr<MemoryTransport>>
  CreatePair();

  Status Send(ByteView wire_message) override;
  Result<Bytes> Receive() override;
  void Close() override;

 private:
  struct Queue {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<Bytes> messages;
    bool closed = false;
  };

  MemoryTransport(std::shared_ptr<Queue> inbox, std::shared_ptr<Queue> outbox)
      : inbox_(std::move(inbox)), outbox_(std::move(outbox)) {}

  std::shared_ptr<Queue> inbox_;
  std::shared_ptr<Queue> outbox_;
};

// Decorator that records every message sent through the wrapped transport,
// and optionally hands each one to an observer (used to mirror socket egress
// to capture files).
class CapturingTransport : public MessageTransport {
 public:
  using Observer = std::function<void(ByteView)>;

  explicit CapturingTransport(std::unique_ptr<MessageTransport> inner,
                              Observer observer = nullptr)
      : inner_(std::move(inner)), observer_(std::move(observer)) {}

  Status Send(ByteView wire_message) override;
  Result<Bytes> Receive() override { return inner_->Receive(); }
  void Close() override { inner_->Close(); }

  std::vector<Bytes> sent() const;
  size_t sent_bytes() const;
  // Total bytes sent inside sealed application frames (msg_type 0x10).
  size_t sent_frame_bytes() const;

 private:
  std::unique_ptr<MessageTransport> inner_;
  Observer observer_;
  mutable std::mutex mu_;
  std::vector<Bytes> sent_;
};

}  // namespace zkg::channel

#endif  // ZKG_CHANNEL_TRANSPORT_H_
